"""Cyclic codes in Z2[x]/(x^r-1) x R[x]/(x^s-1) generated by (f, 0) and (l, g + ua).

"f absent" is the polynomial x^r - 1 (the zero residue) and "g = 0" is
x^s - 1; with these stand-ins every cofactor and degree below is ordinary
polynomial arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .code import (
    CodeType,
    EnumeratedCode,
    GeneratorMatrix,
    code_from_basis,
    gray_image_params,
    module_basis,
    span,
    type_from_ranks,
)
from .errors import CapExceeded, NotShiftClosed, ValidationFailed
from .oneweight import is_one_weight, row_structure_check
from .poly import BinaryPolynomial, divisors_of_xn_minus_1, poly_gcd, xn_minus_1
from .vector import MixedVector, cyclic_shift, from_gray, gray_int

__all__ = [
    "CyclicGenerators",
    "Condition",
    "CyclicTypeDerivation",
    "SearchHit",
    "validate_generators",
    "spanning_set",
    "cyclic_span",
    "cyclic_type",
    "build_one_weight_cyclic",
    "search_one_weight",
    "all_ones",
    "module_closure",
]


def all_ones(n: int) -> BinaryPolynomial:
    """1 + x + ... + x^(n-1) = (x^n - 1)/(x + 1)."""
    return BinaryPolynomial((1 << n) - 1)


@dataclass(frozen=True)
class CyclicGenerators:
    r: int
    s: int
    f: BinaryPolynomial
    l: BinaryPolynomial
    g: BinaryPolynomial
    a: BinaryPolynomial

    @classmethod
    def make(cls, r: int, s: int, l, g, a, f=None) -> CyclicGenerators:
        """Build from polynomials; ``f=None`` means absent, ``g=None`` the zero residue."""
        f = xn_minus_1(r) if f is None else f
        g = xn_minus_1(s) if g is None else g
        return cls(r, s, f, l, g, a)

    @property
    def f_absent(self) -> bool:
        return self.f == xn_minus_1(self.r)

    @property
    def g_zero(self) -> bool:
        return self.g == xn_minus_1(self.s)

    def describe(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "f": "absent" if self.f_absent else str(self.f),
            "l": str(self.l),
            "g": "0" if self.g_zero else str(self.g),
            "a": str(self.a),
        }

    def sort_key(self) -> tuple:
        def k(p: BinaryPolynomial):
            return (p.deg, p.coeffs)

        return k(self.l) + k(self.g) + k(self.a) + k(self.f)


@dataclass(frozen=True)
class Condition:
    name: str
    ok: bool
    severity: str = "error"  # "error" or "warning"

    def __str__(self) -> str:
        status = "ok" if self.ok else self.severity.upper()
        return f"{status}: {self.name}"


def validate_generators(cg: CyclicGenerators) -> list[Condition]:
    xr, xs = xn_minus_1(cg.r), xn_minus_1(cg.s)
    out = [Condition("s must be odd", cg.s % 2 == 1)]
    out.append(Condition("f | x^r-1", cg.f.divides(xr)))
    out.append(Condition("g | x^s-1", cg.g.divides(xs)))
    out.append(Condition("a | g", not cg.a.is_zero() and cg.a.divides(cg.g)))
    out.append(Condition("deg l < deg f", cg.l.deg < cg.f.deg))
    if cg.a.is_zero() or not cg.a.divides(xs):
        out.append(Condition("f | ((x^s-1)/a) l", False))
        return out
    prod = (xs // cg.a) * cg.l
    out.append(Condition("f | ((x^s-1)/a) l", cg.f.divides(prod)))
    # Literally false whenever f is absent and the divisibility holds, so only a warning then.
    out.append(Condition("f != ((x^s-1)/a) l", cg.f != prod, "warning" if cg.f_absent else "error"))
    return out


def _errors(conds: Iterable[Condition]) -> list[Condition]:
    return [c for c in conds if not c.ok and c.severity == "error"]


def _check(cg: CyclicGenerators) -> None:
    bad = _errors(validate_generators(cg))
    if bad:
        raise ValidationFailed("; ".join(c.name for c in bad))


def _rot(x: int, i: int, n: int) -> int:
    """x^i times an n-bit residue, modulo x^n - 1."""
    if n == 0:
        return 0
    i %= n
    return ((x << i) | (x >> (n - i))) & ((1 << n) - 1)


def _shifts(cg: CyclicGenerators, binary: BinaryPolynomial, p: BinaryPolynomial, q: BinaryPolynomial,
            count: int) -> list[MixedVector]:
    r, s = cg.r, cg.s
    b0 = binary.to_vector_bits(r)
    p0, q0 = p.to_vector_bits(s), q.to_vector_bits(s)
    return [MixedVector(r, s, _rot(b0, i, r), _rot(p0, i, s), _rot(q0, i, s)) for i in range(count)]


def spanning_set(cg: CyclicGenerators, validate: bool = True) -> GeneratorMatrix:
    """Rows S1 (shifts of (f,0)), S2 (shifts of (l, g+ua)), S3 (shifts of (h_g l, u h_g a))."""
    if validate:
        _check(cg)
    zero = BinaryPolynomial(0)
    h_f = xn_minus_1(cg.r) // cg.f
    h_g = xn_minus_1(cg.s) // cg.g
    b = cg.g // cg.a
    rows = _shifts(cg, cg.f, zero, zero, h_f.deg)
    rows += _shifts(cg, cg.l, cg.g, cg.a, h_g.deg)
    rows += _shifts(cg, h_g * cg.l, zero, h_g * cg.a, b.deg)
    return GeneratorMatrix(cg.r, cg.s, tuple(rows))


def cyclic_span(cg: CyclicGenerators, cap: int | None = None, validate: bool = True) -> EnumeratedCode:
    code = span(spanning_set(cg, validate), cap=cap)
    words = code.word_set
    for v in code.generators:
        if gray_int(cyclic_shift(v)) not in words:
            raise NotShiftClosed(f"shift of {v} left the code")
    return code


@dataclass(frozen=True)
class CyclicTypeDerivation:
    t1: int
    t2: int
    t3: int
    t4: int
    d1: BinaryPolynomial
    code_type: CodeType


def cyclic_type(cg: CyclicGenerators, validate: bool = True) -> CyclicTypeDerivation:
    """Type (r, s; r-t4, s-t2, t2+t4-t1-t3) from the generator degrees."""
    if validate:
        _check(cg)
    t1, t2, t3 = cg.f.deg, cg.g.deg, cg.a.deg
    d1 = poly_gcd(cg.f, (xn_minus_1(cg.s) // cg.g) * cg.l)
    t4 = d1.deg
    try:
        ctype = CodeType(cg.r, cg.s, cg.r - t4, cg.s - t2, t2 + t4 - t1 - t3)
    except ValueError as exc:
        raise ValidationFailed(str(exc)) from None
    return CyclicTypeDerivation(t1, t2, t3, t4, d1, ctype)


def build_one_weight_cyclic(s: int) -> CyclicGenerators:
    """r = s and l = g = a = 1 + x + ... + x^(s-1): one-weight with m = 2s."""
    if s < 3 or s % 2 == 0:
        raise ValueError("s must be an odd integer >= 3")
    e = all_ones(s)
    return CyclicGenerators.make(s, s, e, e, e)


def module_closure(r: int, s: int, seeds: Iterable[MixedVector]) -> EnumeratedCode:
    """Smallest shift-closed R-submodule containing the seeds (a fixpoint oracle)."""
    basis = module_basis(seeds)
    while True:
        grown = basis + [gray_int(cyclic_shift(from_gray(b, r, s))) for b in basis]
        grown = module_basis(from_gray(b, r, s) for b in grown)
        if len(grown) == len(basis):
            return code_from_basis(r, s, grown)
        basis = grown


@dataclass
class SearchHit:
    generators: CyclicGenerators
    m: int
    gray_params: tuple[int, int, int]
    code_type: CodeType
    violations: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = self.generators.describe()
        d.update(m=self.m, grayParams=list(self.gray_params), type=list(self.code_type.as_tuple()))
        return d


def search_one_weight(
    r: int,
    s: int,
    *,
    g_nonzero: bool = True,
    g_zero: bool = True,
    l_choices: Iterable[BinaryPolynomial] | None = None,
    a_choices: Iterable[BinaryPolynomial] | None = None,
    max_divisors: int | None = None,
    max_tuples: int = 1 << 20,
    cap: int | None = None,
) -> list[SearchHit]:
    """One-weight cyclic codes <(l, g+ua)> over divisor choices of l, g, a.

    Results are deduplicated by code and listed in canonical generator order.
    """
    if s % 2 == 0:
        raise ValueError("s must be odd")
    kw = {} if max_divisors is None else {"cap": max_divisors}
    ls = list(l_choices) if l_choices is not None else divisors_of_xn_minus_1(r, **kw)
    ds = divisors_of_xn_minus_1(s, **kw)
    xs = xn_minus_1(s)
    gs = [g for g in ds if (g == xs and g_zero) or (g != xs and g_nonzero)]
    tuples = []
    for g in gs:
        for a in (a_choices if a_choices is not None else ds):
            if not a.divides(g):
                continue
            for l in ls:
                tuples.append(CyclicGenerators.make(r, s, l, g, a))
    tuples.sort(key=CyclicGenerators.sort_key)

    hits: list[SearchHit] = []
    seen: set = set()
    for count, cg in enumerate(tuples):
        if count >= max_tuples:
            err = CapExceeded(f"search stopped after {max_tuples} generator tuples")
            err.partial = hits
            raise err
        if _errors(validate_generators(cg)):
            continue
        rows = spanning_set(cg, validate=False)
        if not rows.rows:
            continue
        code = cyclic_span(cg, cap=cap, validate=False)
        if len(code) < 2 or code in seen:
            continue
        m = is_one_weight(code)
        if m is None:
            continue
        seen.add(code)
        hit = SearchHit(cg, m, gray_image_params(code), type_from_ranks(rows))
        hit.violations = row_structure_check(rows, m)
        hits.append(hit)
    return hits
