"""Polynomials over GF(2) and over R, and the quotient rings modulo x^n - 1.

A binary polynomial is an int whose bit i is the coefficient of x^i.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .errors import CapExceeded

__all__ = [
    "BinaryPolynomial",
    "RingPolynomial",
    "xn_minus_1",
    "poly_mul_mod",
    "poly_gcd",
    "factor_xn_minus_1",
    "divisors_of_xn_minus_1",
    "ring_poly_mul_mod",
    "parse_poly",
    "DEFAULT_DIVISOR_CAP",
]

DEFAULT_DIVISOR_CAP = 1 << 16


def _clmul(a: int, b: int) -> int:
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    quo = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        quo |= 1 << shift
        a ^= b << shift
    return quo, a


def _reduce(a: int, n: int) -> int:
    """a mod (x^n - 1): fold high bits back onto the low ones."""
    mask = (1 << n) - 1
    while a >> n:
        a = (a & mask) ^ (a >> n)
    return a


@dataclass(frozen=True)
class BinaryPolynomial:
    bits: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0:
            raise ValueError("coefficient bits must be nonnegative")

    @classmethod
    def from_coeffs(cls, coeffs) -> BinaryPolynomial:
        return cls(sum((c & 1) << i for i, c in enumerate(coeffs)))

    @classmethod
    def monomial(cls, k: int) -> BinaryPolynomial:
        return cls(1 << k)

    @property
    def degree(self) -> int | None:
        """None for the zero polynomial."""
        return self.bits.bit_length() - 1 if self.bits else None

    @property
    def deg(self) -> int:
        """Degree with -1 for the zero polynomial (handy for comparisons)."""
        return self.bits.bit_length() - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(max(self.bits.bit_length(), 1)))

    def is_zero(self) -> bool:
        return self.bits == 0

    def __add__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return BinaryPolynomial(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return BinaryPolynomial(_clmul(self.bits, other.bits))

    def __divmod__(self, other: BinaryPolynomial) -> tuple[BinaryPolynomial, BinaryPolynomial]:
        q, r = _divmod(self.bits, other.bits)
        return BinaryPolynomial(q), BinaryPolynomial(r)

    def __floordiv__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return divmod(self, other)[1]

    def divides(self, other: BinaryPolynomial) -> bool:
        if self.bits == 0:
            return other.bits == 0
        return (other % self).bits == 0

    def reduce(self, n: int) -> BinaryPolynomial:
        return BinaryPolynomial(_reduce(self.bits, n))

    def shift(self, i: int, n: int) -> BinaryPolynomial:
        """x^i * self mod x^n - 1."""
        return BinaryPolynomial(_reduce(self.bits << i, n))

    def to_vector_bits(self, n: int) -> int:
        """Coefficient vector of the residue mod x^n - 1 as an n-bit int."""
        return _reduce(self.bits, n) if n else 0

    def __str__(self) -> str:
        if not self.bits:
            return "0"
        terms = []
        for i in range(self.bits.bit_length()):
            if (self.bits >> i) & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"BinaryPolynomial({self})"


def xn_minus_1(n: int) -> BinaryPolynomial:
    return BinaryPolynomial((1 << n) | 1)


def poly_mul_mod(a: BinaryPolynomial, b: BinaryPolynomial, n: int) -> BinaryPolynomial:
    if n < 1:
        raise ValueError("n must be >= 1")
    return BinaryPolynomial(_reduce(_clmul(a.bits, b.bits), n))


def poly_gcd(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    """Euclid over GF(2); monic by construction."""
    x, y = a.bits, b.bits
    if x == 0 and y == 0:
        raise ValueError("gcd(0, 0) is undefined")
    while y:
        x, y = y, _divmod(x, y)[1]
    return BinaryPolynomial(x)


@lru_cache(maxsize=None)
def factor_xn_minus_1(n: int) -> tuple[tuple[BinaryPolynomial, int], ...]:
    """Irreducible factorization of x^n - 1 as ((factor, multiplicity), ...).

    Trial division by every monic polynomial of increasing degree; factors of
    lower degree are divided out first so each hit is irreducible.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rem = (1 << n) | 1
    out: list[tuple[BinaryPolynomial, int]] = []
    d = 1
    while rem.bit_length() - 1 >= 2 * d:
        for low in range(1 << d):
            cand = (1 << d) | low
            mult = 0
            while True:
                quo, r = _divmod(rem, cand)
                if r:
                    break
                rem = quo
                mult += 1
            if mult:
                out.append((BinaryPolynomial(cand), mult))
        d += 1
    if rem != 1:
        # what is left has no factor of degree <= deg/2, hence irreducible
        for i, (f, m) in enumerate(out):
            if f.bits == rem:
                out[i] = (f, m + 1)
                break
        else:
            out.append((BinaryPolynomial(rem), 1))
    out.sort(key=lambda fm: (fm[0].deg, fm[0].bits))
    if n % 2 == 1:
        assert all(m == 1 for _, m in out), "x^n - 1 must be squarefree for odd n"
    return tuple(out)


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[BinaryPolynomial, ...]:
    factors = factor_xn_minus_1(n)
    seen = set()
    for exps in product(*(range(m + 1) for _, m in factors)):
        acc = 1
        for (f, _), e in zip(factors, exps):
            for _ in range(e):
                acc = _clmul(acc, f.bits)
        seen.add(acc)
    return tuple(BinaryPolynomial(b) for b in sorted(seen, key=lambda b: (b.bit_length(), _bitrev_key(b))))


def _bitrev_key(b: int) -> tuple[int, ...]:
    return tuple((b >> i) & 1 for i in range(b.bit_length()))


def divisors_of_xn_minus_1(n: int, cap: int = DEFAULT_DIVISOR_CAP) -> list[BinaryPolynomial]:
    """All monic divisors of x^n - 1, sorted by (degree, coefficient bits)."""
    count = 1
    for _, m in factor_xn_minus_1(n):
        count *= m + 1
    if count > cap:
        raise CapExceeded(f"x^{n}-1 has {count} divisors, cap is {cap}")
    return list(_divisors(n))


@dataclass(frozen=True)
class RingPolynomial:
    """p_part + u * q_part with both parts binary polynomials."""

    p_part: BinaryPolynomial = BinaryPolynomial()
    q_part: BinaryPolynomial = BinaryPolynomial()

    @property
    def degree(self) -> int | None:
        d = max(self.p_part.deg, self.q_part.deg)
        return None if d < 0 else d

    def __add__(self, other: RingPolynomial) -> RingPolynomial:
        return RingPolynomial(self.p_part + other.p_part, self.q_part + other.q_part)

    def __str__(self) -> str:
        if self.q_part.is_zero():
            return str(self.p_part)
        if self.p_part.is_zero():
            return f"u({self.q_part})"
        return f"{self.p_part}+u({self.q_part})"


def ring_poly_mul_mod(a: RingPolynomial, b: RingPolynomial, n: int) -> RingPolynomial:
    p = poly_mul_mod(a.p_part, b.p_part, n)
    q = poly_mul_mod(a.p_part, b.q_part, n) + poly_mul_mod(a.q_part, b.p_part, n)
    return RingPolynomial(p, q)


_TERM = re.compile(r"^(?:(1)|x(?:\^(\d+))?)$")


def parse_poly(text: str) -> BinaryPolynomial:
    """Parse "1+x^2+x^3" or the LSB-first bitstring "1011".

    Repeated monomials cancel, as they do over GF(2).
    """
    t = text.replace(" ", "").lower()
    if not t:
        raise ValueError("empty polynomial")
    if t == "0":
        return BinaryPolynomial(0)
    if set(t) <= {"0", "1"} and len(t) > 1:
        return BinaryPolynomial.from_coeffs(int(c) for c in t)
    bits = 0
    for term in t.replace("-", "+").split("+"):
        m = _TERM.match(term)
        if not m:
            raise ValueError(f"invalid polynomial term {term!r} in {text!r}")
        if m.group(1):
            k = 0
        else:
            k = int(m.group(2)) if m.group(2) else 1
        bits ^= 1 << k
    return BinaryPolynomial(bits)
