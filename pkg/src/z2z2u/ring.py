"""Arithmetic in R = Z2 + uZ2 = {0, 1, u, 1+u} with u^2 = 0.

An element p + uq is held as the bit pair (p, q).  Addition is XOR of the
pairs; multiplication is (p1 + uq1)(p2 + uq2) = p1p2 + u(p1q2 + q1p2).
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "RingElement",
    "ZERO",
    "ONE",
    "U",
    "W",
    "ELEMENTS",
    "add",
    "mul",
    "eta",
    "lee_weight",
    "is_unit",
    "inverse",
    "parse_token",
]

_TOKENS = {(0, 0): "0", (1, 0): "1", (0, 1): "u", (1, 1): "w"}
_LEE = {(0, 0): 0, (1, 0): 1, (0, 1): 2, (1, 1): 1}


@dataclass(frozen=True, order=True)
class RingElement:
    p: int = 0
    q: int = 0

    def __post_init__(self) -> None:
        if self.p not in (0, 1) or self.q not in (0, 1):
            raise ValueError(f"ring element bits must be 0/1, got ({self.p}, {self.q})")

    def __add__(self, other: RingElement) -> RingElement:
        return RingElement(self.p ^ other.p, self.q ^ other.q)

    __sub__ = __add__

    def __neg__(self) -> RingElement:
        return self

    def __mul__(self, other: RingElement) -> RingElement:
        if not isinstance(other, RingElement):
            return NotImplemented
        return RingElement(self.p & other.p, (self.p & other.q) ^ (self.q & other.p))

    def __bool__(self) -> bool:
        return bool(self.p or self.q)

    def __str__(self) -> str:
        return _TOKENS[(self.p, self.q)]

    def __repr__(self) -> str:
        return f"RingElement({self})"

    @property
    def eta(self) -> int:
        return self.p

    @property
    def lee_weight(self) -> int:
        return _LEE[(self.p, self.q)]

    @property
    def is_unit(self) -> bool:
        return self.p == 1


ZERO = RingElement(0, 0)
ONE = RingElement(1, 0)
U = RingElement(0, 1)
W = RingElement(1, 1)  # 1 + u
ELEMENTS = (ZERO, ONE, U, W)


def add(a: RingElement, b: RingElement) -> RingElement:
    return a + b


def mul(a: RingElement, b: RingElement) -> RingElement:
    return a * b


def eta(a: RingElement) -> int:
    """The reduction map R -> Z2, p + uq -> p."""
    return a.p


def lee_weight(a: RingElement) -> int:
    return a.lee_weight


def is_unit(a: RingElement) -> bool:
    return a.is_unit


def inverse(a: RingElement) -> RingElement:
    """Both units of R are their own inverse."""
    if not a.is_unit:
        raise ZeroDivisionError(f"{a} is not a unit of R")
    return a


def parse_token(tok: str) -> RingElement:
    """Parse one of "0", "1", "u", "w" or "1+u" (case-insensitive, spaces ignored)."""
    t = tok.replace(" ", "").lower()
    table = {"0": ZERO, "1": ONE, "u": U, "w": W, "1+u": W, "u+1": W}
    try:
        return table[t]
    except KeyError:
        raise ValueError(f"invalid ring token {tok!r}") from None
