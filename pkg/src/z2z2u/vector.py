"""Vectors of Z2^r x R^s.

A vector is stored as three bit planes packed into Python ints: ``bin`` (the
binary block), and ``p``/``q`` (the constant and u-coefficients of the ring
block).  Bit i of each plane is coordinate i, so bulk addition and
multiplication are word-wide XOR/AND.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .ring import RingElement, parse_token

__all__ = [
    "MixedVector",
    "scalar_mul",
    "inner_product",
    "gray_map",
    "gray_int",
    "from_gray",
    "cyclic_shift",
    "parse_vector",
    "hamming_weight",
]


def _mask(n: int) -> int:
    return (1 << n) - 1


def _rotate(x: int, n: int) -> int:
    """Right cyclic rotation of an n-bit coordinate vector by one position."""
    if n <= 1:
        return x
    return ((x << 1) & _mask(n)) | (x >> (n - 1))


def hamming_weight(x: int) -> int:
    return x.bit_count()


@dataclass(frozen=True)
class MixedVector:
    r: int
    s: int
    bin: int = 0
    p: int = 0
    q: int = 0

    def __post_init__(self) -> None:
        if self.r < 0 or self.s < 0:
            raise ValueError("block lengths must be nonnegative")
        if self.bin >> self.r or self.p >> self.s or self.q >> self.s:
            raise ValueError("plane has bits beyond its declared length")

    @classmethod
    def zero(cls, r: int, s: int) -> MixedVector:
        return cls(r, s)

    @classmethod
    def from_lists(cls, bits: Sequence[int], ring: Sequence[RingElement]) -> MixedVector:
        b = p = q = 0
        for i, x in enumerate(bits):
            if x not in (0, 1):
                raise ValueError(f"binary coordinate must be 0/1, got {x!r}")
            b |= x << i
        for j, e in enumerate(ring):
            p |= e.p << j
            q |= e.q << j
        return cls(len(bits), len(ring), b, p, q)

    # -- views ---------------------------------------------------------
    @property
    def n(self) -> int:
        """Length of the Gray image."""
        return self.r + 2 * self.s

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.bin >> i) & 1 for i in range(self.r))

    @property
    def ring(self) -> tuple[RingElement, ...]:
        return tuple(RingElement((self.p >> j) & 1, (self.q >> j) & 1) for j in range(self.s))

    @property
    def weight(self) -> int:
        # Lee weight of p+uq is popcount(q) + popcount(p^q), matching the Gray image.
        return self.bin.bit_count() + self.q.bit_count() + (self.p ^ self.q).bit_count()

    @property
    def unit_mask(self) -> int:
        """Ring coordinates holding a unit (1 or 1+u)."""
        return self.p

    def is_free(self) -> bool:
        return self.p != 0

    def sort_key(self) -> tuple[int, ...]:
        return (
            tuple((self.bin >> i) & 1 for i in range(self.r))
            + tuple((self.p >> j) & 1 for j in range(self.s))
            + tuple((self.q >> j) & 1 for j in range(self.s))
        )

    # -- arithmetic ----------------------------------------------------
    def _check(self, other: MixedVector) -> None:
        if (self.r, self.s) != (other.r, other.s):
            raise ValueError(f"shape mismatch: ({self.r},{self.s}) vs ({other.r},{other.s})")

    def __add__(self, other: MixedVector) -> MixedVector:
        self._check(other)
        return MixedVector(self.r, self.s, self.bin ^ other.bin, self.p ^ other.p, self.q ^ other.q)

    __sub__ = __add__

    def __rmul__(self, d: RingElement) -> MixedVector:
        return scalar_mul(d, self)

    def __bool__(self) -> bool:
        return bool(self.bin or self.p or self.q)

    def __str__(self) -> str:
        left = " ".join(str(b) for b in self.bits)
        right = " ".join(str(e) for e in self.ring)
        return f"{left} | {right}".strip()

    def gray(self) -> int:
        return gray_int(self)

    def shift(self) -> MixedVector:
        return cyclic_shift(self)


def scalar_mul(d: RingElement, v: MixedVector) -> MixedVector:
    """d(a, b) = (eta(d) a, d b)."""
    if d.p:
        # units: 1*b = b; (1+u)*b adds u*p to q
        q = v.q ^ (v.p if d.q else 0)
        return MixedVector(v.r, v.s, v.bin, v.p, q)
    if d.q:
        return MixedVector(v.r, v.s, 0, 0, v.p)
    return MixedVector(v.r, v.s)


def inner_product(v: MixedVector, w: MixedVector) -> RingElement:
    """<v, w> = u * sum(a_i d_i) + sum(b_j e_j), evaluated in R."""
    v._check(w)
    p = (v.p & w.p).bit_count() & 1
    q = ((v.p & w.q) ^ (v.q & w.p) ^ (v.bin & w.bin)).bit_count() & 1
    return RingElement(p, q)


def gray_int(v: MixedVector) -> int:
    """Gray image packed as an int: bits [0,r) binary block, [r,r+s) q, [r+s,r+2s) p^q."""
    return v.bin | (v.q << v.r) | ((v.p ^ v.q) << (v.r + v.s))


def gray_map(v: MixedVector) -> tuple[int, ...]:
    g = gray_int(v)
    return tuple((g >> i) & 1 for i in range(v.n))


def from_gray(g: int, r: int, s: int) -> MixedVector:
    m = _mask(s)
    q = (g >> r) & m
    p = ((g >> (r + s)) & m) ^ q
    return MixedVector(r, s, g & _mask(r), p, q)


def cyclic_shift(v: MixedVector) -> MixedVector:
    """Simultaneous right rotation of both blocks."""
    return MixedVector(v.r, v.s, _rotate(v.bin, v.r), _rotate(v.p, v.s), _rotate(v.q, v.s))


def _split_tokens(text: str) -> list[str]:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    return [t for t in text.replace(",", " ").split() if t]


def parse_vector(text: str, r: int | None = None, s: int | None = None) -> MixedVector:
    """Parse "1 1 | w w", "(1,1|1+u,1+u)" and similar literals."""
    if text.count("|") != 1:
        raise ValueError(f"vector literal needs exactly one '|': {text!r}")
    left, right = text.split("|")
    if left.strip().startswith("("):
        left = left.strip()[1:]
    if right.strip().endswith(")"):
        right = right.strip()[:-1]
    btoks = _split_tokens(left)
    rtoks = _split_tokens(right)
    bits = []
    for t in btoks:
        if t not in ("0", "1"):
            raise ValueError(f"invalid binary token {t!r}")
        bits.append(int(t))
    ring = [parse_token(t) for t in rtoks]
    if r is not None and len(bits) != r:
        raise ValueError(f"expected {r} binary tokens, got {len(bits)}")
    if s is not None and len(ring) != s:
        raise ValueError(f"expected {s} ring tokens, got {len(ring)}")
    return MixedVector.from_lists(bits, ring)


def span_check_shapes(vectors: Iterable[MixedVector], r: int, s: int) -> None:
    for v in vectors:
        if (v.r, v.s) != (r, s):
            raise ValueError(f"vector of shape ({v.r},{v.s}) in a ({r},{s}) context")

