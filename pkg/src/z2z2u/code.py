"""Z2Z2[u]-linear codes: span, standard form, duality, weight enumerators.

Codes are R-submodules of Z2^r x R^s.  Because the Gray map is an additive
isomorphism onto Z2^(r+2s), every code is handled internally through a GF(2)
basis of its Gray image; the R-module generated by rows v_1..v_k has the GF(2)
basis obtained from {v_i, u v_i}.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import comb
from typing import Iterable, Sequence

from . import gf2
from .errors import CodeTooLarge, NonIntegerResult, ZeroCode
from .ring import U
from .vector import MixedVector, from_gray, gray_int, scalar_mul

__all__ = [
    "GeneratorMatrix",
    "CodeType",
    "StandardForm",
    "EnumeratedCode",
    "WeightEnumerator",
    "DEFAULT_MAX_CODE_SIZE",
    "max_code_size",
    "module_basis",
    "code_log_size",
    "span",
    "standard_form",
    "parity_check",
    "dual",
    "min_distance",
    "weight_enumerator",
    "macwilliams_transform",
    "gray_image_params",
    "is_separable",
    "type_from_ranks",
]

DEFAULT_MAX_CODE_SIZE = 1 << 22


def max_code_size() -> int:
    env = os.environ.get("Z2Z2U_MAX_CODE_SIZE")
    return int(env) if env else DEFAULT_MAX_CODE_SIZE


@dataclass(frozen=True)
class GeneratorMatrix:
    r: int
    s: int
    rows: tuple[MixedVector, ...] = ()

    def __post_init__(self) -> None:
        for v in self.rows:
            if (v.r, v.s) != (self.r, self.s):
                raise ValueError(f"row of shape ({v.r},{v.s}) in a ({self.r},{self.s}) matrix")

    @classmethod
    def of(cls, rows: Sequence[MixedVector], r: int | None = None, s: int | None = None) -> GeneratorMatrix:
        rows = tuple(rows)
        if rows:
            r, s = rows[0].r, rows[0].s
        if r is None or s is None:
            raise ValueError("shape is required for an empty generator matrix")
        return cls(r, s, rows)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i: int) -> MixedVector:
        return self.rows[i]

    def __str__(self) -> str:
        return "\n".join(str(v) for v in self.rows)


@dataclass(frozen=True)
class CodeType:
    r: int
    s: int
    k0: int
    k1: int
    k2: int

    def __post_init__(self) -> None:
        if min(self.k0, self.k1, self.k2) < 0 or self.k0 > self.r or self.k1 + self.k2 > self.s:
            raise ValueError(f"inconsistent type {self.as_tuple()}")

    @property
    def log_size(self) -> int:
        return self.k0 + 2 * self.k1 + self.k2

    @property
    def size(self) -> int:
        return 1 << self.log_size

    def dual(self) -> CodeType:
        return CodeType(self.r, self.s, self.r - self.k0, self.s - self.k1 - self.k2, self.k2)

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.r, self.s, self.k0, self.k1, self.k2)

    def __str__(self) -> str:
        return f"({self.r},{self.s};{self.k0},{self.k1},{self.k2})"


def module_basis(rows: Iterable[MixedVector]) -> list[int]:
    """Reduced GF(2) basis (Gray ints) of the R-module spanned by rows."""
    gens = []
    for v in rows:
        gens.append(gray_int(v))
        gens.append(gray_int(scalar_mul(U, v)))
    return gf2.echelon(gens)


def code_log_size(rows: Iterable[MixedVector]) -> int:
    return len(module_basis(rows))


@dataclass(frozen=True, eq=False)
class EnumeratedCode:
    """An explicitly enumerated code.

    ``words`` holds Gray images as ints; :attr:`codewords` gives the
    MixedVectors in canonical order.
    """

    r: int
    s: int
    basis: tuple[int, ...]
    words: tuple[int, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.r + 2 * self.s

    @property
    def log_size(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.words)

    @cached_property
    def word_set(self) -> frozenset[int]:
        return frozenset(self.words)

    def __contains__(self, v: MixedVector) -> bool:
        return gray_int(v) in self.word_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EnumeratedCode):
            return NotImplemented
        return (self.r, self.s) == (other.r, other.s) and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.r, self.s, self.basis))

    @cached_property
    def codewords(self) -> tuple[MixedVector, ...]:
        vecs = [from_gray(g, self.r, self.s) for g in self.words]
        vecs.sort(key=MixedVector.sort_key)
        return tuple(vecs)

    @property
    def generators(self) -> GeneratorMatrix:
        """The GF(2) basis, which also generates the code as an R-module."""
        return GeneratorMatrix(self.r, self.s, tuple(from_gray(g, self.r, self.s) for g in self.basis))

    @cached_property
    def weights(self) -> tuple[int, ...]:
        return tuple(w.bit_count() for w in self.words)

    @cached_property
    def support(self) -> int:
        """OR of all Gray images; a zero bit marks an identically zero coordinate."""
        acc = 0
        for b in self.basis:
            acc |= b
        return acc

    def has_zero_column(self) -> bool:
        return self.support != (1 << self.n) - 1


def span(gens: GeneratorMatrix | Sequence[MixedVector], cap: int | None = None, r: int | None = None,
         s: int | None = None) -> EnumeratedCode:
    """Enumerate the R-submodule generated by the rows."""
    if not isinstance(gens, GeneratorMatrix):
        gens = GeneratorMatrix.of(gens, r, s)
    cap = max_code_size() if cap is None else cap
    basis = module_basis(gens.rows)
    if (1 << len(basis)) > cap:
        raise CodeTooLarge(f"code has 2^{len(basis)} words, cap is {cap}")
    return EnumeratedCode(gens.r, gens.s, tuple(basis), tuple(gf2.enumerate_span(basis)))


def code_from_basis(r: int, s: int, basis: Sequence[int], cap: int | None = None) -> EnumeratedCode:
    cap = max_code_size() if cap is None else cap
    basis = gf2.echelon(basis)
    if (1 << len(basis)) > cap:
        raise CodeTooLarge(f"code has 2^{len(basis)} words, cap is {cap}")
    return EnumeratedCode(r, s, tuple(basis), tuple(gf2.enumerate_span(basis)))


# ----------------------------------------------------------------------------
# standard form


def _axpy(pe: int, qe: int, src: list[int], dst: list[int]) -> None:
    """dst += (pe + u qe) * src in place, on [bin, p, q] planes."""
    if pe:
        dst[0] ^= src[0]
        dst[1] ^= src[1]
        dst[2] ^= src[2] ^ (src[1] if qe else 0)
    elif qe:
        dst[2] ^= src[1]


def _permute_bits(x: int, perm: Sequence[int]) -> int:
    """New coordinate c takes old coordinate perm[c]."""
    out = 0
    for c, old in enumerate(perm):
        out |= ((x >> old) & 1) << c
    return out


def _permute(v: MixedVector, bin_perm: Sequence[int], ring_perm: Sequence[int]) -> MixedVector:
    return MixedVector(v.r, v.s, _permute_bits(v.bin, bin_perm), _permute_bits(v.p, ring_perm),
                       _permute_bits(v.q, ring_perm))


def _is_identity(perm: Sequence[int]) -> bool:
    return all(c == old for c, old in enumerate(perm))


def _inverse(perm: Sequence[int]) -> list[int]:
    inv = [0] * len(perm)
    for c, old in enumerate(perm):
        inv[old] = c
    return inv


@dataclass(frozen=True)
class StandardForm:
    """Generator matrix in block standard form.

    Rows are ordered as the template: k0 rows (I | A1 || 0 0 uT), k1 free
    rows (0 S || I A B1+uB2), then k2 rows (0 0 || 0 uI uD).  ``g_std`` is
    expressed in permuted coordinates; column c of ``g_std`` is column
    ``bin_perm[c]`` (resp. ``ring_perm[c]``) of the input.
    """

    g_std: GeneratorMatrix
    bin_perm: tuple[int, ...]
    ring_perm: tuple[int, ...]
    code_type: CodeType

    @property
    def k0_rows(self) -> tuple[MixedVector, ...]:
        return self.g_std.rows[: self.code_type.k0]

    @property
    def free_rows(self) -> tuple[MixedVector, ...]:
        t = self.code_type
        return self.g_std.rows[t.k0 : t.k0 + t.k1]

    @property
    def k2_rows(self) -> tuple[MixedVector, ...]:
        t = self.code_type
        return self.g_std.rows[t.k0 + t.k1 :]

    @cached_property
    def _inverse_perms(self) -> tuple[list[int], list[int]] | None:
        if self.is_identity_permutation:
            return None
        return _inverse(self.bin_perm), _inverse(self.ring_perm)

    def unpermute(self, v: MixedVector) -> MixedVector:
        """Map a vector in standard-form coordinates back to input coordinates."""
        inv = self._inverse_perms
        return v if inv is None else _permute(v, *inv)

    def original_rows(self) -> GeneratorMatrix:
        g = self.g_std
        return GeneratorMatrix(g.r, g.s, tuple(self.unpermute(v) for v in g.rows))

    @property
    def is_identity_permutation(self) -> bool:
        return _is_identity(self.bin_perm) and _is_identity(self.ring_perm)


def standard_form(gens: GeneratorMatrix | Sequence[MixedVector], r: int | None = None,
                  s: int | None = None, verify: bool = True) -> StandardForm:
    """Row-reduce to the block standard form, permuting columns within blocks.

    Pivots are extracted in the order free rows (a unit in the ring block),
    then binary pivots among the remaining rows, then u-pivots among rows
    whose binary block has been cleared.  With ``verify`` the result is
    checked to span the input code.
    """
    if not isinstance(gens, GeneratorMatrix):
        gens = GeneratorMatrix.of(gens, r, s)
    r, s = gens.r, gens.s
    rows = [[v.bin, v.p, v.q] for v in gens.rows]

    free: list[int] = []
    ring_piv: list[int] = []
    while True:
        avail = 0
        for i, row in enumerate(rows):
            if i not in free:
                avail |= row[1]
        if not avail:
            break
        j = (avail & -avail).bit_length() - 1
        i = next(i for i, row in enumerate(rows) if (row[1] >> j) & 1 and i not in free)
        piv = rows[i]
        if (piv[2] >> j) & 1:
            _scale_w(piv)
        for t, row in enumerate(rows):
            if t != i:
                pe, qe = (row[1] >> j) & 1, (row[2] >> j) & 1
                if pe or qe:
                    _axpy(pe, qe, piv, row)
        free.append(i)
        ring_piv.append(j)

    rest = [i for i in range(len(rows)) if i not in free]
    k0_rows: list[int] = []
    bin_piv: list[int] = []
    for c in range(r):
        bit = 1 << c
        hit = next((t for t in rest if rows[t][0] & bit and t not in k0_rows), None)
        if hit is None:
            continue
        piv = rows[hit]
        for x, row in enumerate(rows):
            if x != hit and row[0] & bit:
                _axpy(1, 0, piv, row)
        k0_rows.append(hit)
        bin_piv.append(c)

    left = [t for t in rest if t not in k0_rows]
    k2_rows: list[int] = []
    u_piv: list[int] = []
    for j in range(s):
        bit = 1 << j
        hit = next((t for t in left if rows[t][2] & bit and t not in k2_rows), None)
        if hit is None:
            continue
        piv = rows[hit]
        assert piv[0] == 0 and piv[1] == 0
        for x, row in enumerate(rows):
            if x != hit and row[2] & bit:
                _axpy(1, 0, piv, row)
        k2_rows.append(hit)
        u_piv.append(j)
    for t in left:
        if t not in k2_rows:
            assert rows[t] == [0, 0, 0], "leftover row after reduction"

    bin_perm = tuple(bin_piv + [c for c in range(r) if c not in bin_piv])
    ring_perm = tuple(ring_piv + u_piv + [j for j in range(s) if j not in ring_piv and j not in u_piv])
    order = k0_rows + free + k2_rows
    if _is_identity(bin_perm) and _is_identity(ring_perm):
        std_rows = tuple(MixedVector(r, s, *rows[i]) for i in order)
    else:
        std_rows = tuple(_permute(MixedVector(r, s, *rows[i]), bin_perm, ring_perm) for i in order)
    ctype = CodeType(r, s, len(k0_rows), len(free), len(k2_rows))
    sf = StandardForm(GeneratorMatrix(r, s, std_rows), bin_perm, ring_perm, ctype)
    if verify and not gf2.same_span(module_basis(sf.original_rows().rows), module_basis(gens.rows)):
        raise AssertionError("standard form does not span the input code")
    return sf


def _scale_w(row: list[int]) -> None:
    # (1+u) * (a | p + uq) = (a | p + u(q + p))
    row[2] ^= row[1]


def type_from_ranks(gens: GeneratorMatrix | Sequence[MixedVector], r: int | None = None,
                    s: int | None = None) -> CodeType:
    """Type from GF(2) ranks, without row reduction over R.

    k1 is the rank of the unit pattern (p-plane) of the code, k0 + k1 the rank
    of its reduction modulo u (binary block with p-plane), and k2 what remains
    of log2 |C|.
    """
    if not isinstance(gens, GeneratorMatrix):
        gens = GeneratorMatrix.of(gens, r, s)
    rows = gens.rows
    k1 = gf2.rank(v.p for v in rows)
    k01 = gf2.rank(v.bin | (v.p << gens.r) for v in rows)
    total = code_log_size(rows)
    return CodeType(gens.r, gens.s, k01 - k1, k1, total - k01 - k1)


# ----------------------------------------------------------------------------
# duality


def parity_check(sf: StandardForm) -> GeneratorMatrix:
    """Generator matrix of the dual code, in the input's column order."""
    t = sf.code_type
    r, s, k0, k1, k2 = t.as_tuple()
    rest0 = k1 + k2
    K0, F, K2 = sf.k0_rows, sf.free_rows, sf.k2_rows

    def bit(x: int, i: int) -> int:
        return (x >> i) & 1

    out: list[MixedVector] = []
    # [A1^t  I | uS^t 0 0]
    for i in range(r - k0):
        col = k0 + i
        b = sum(bit(K0[c].bin, col) << c for c in range(k0)) | (1 << col)
        q = sum(bit(F[c].bin, col) << c for c in range(k1))
        out.append(MixedVector(r, s, b, 0, q))
    # [T^t 0 | (B1+uB2)^t + D^t A^t   D^t   I]
    for i in range(s - k1 - k2):
        rho = rest0 + i
        b = sum(bit(K0[c].q, rho) << c for c in range(k0))
        p = q = 0
        for c in range(k1):
            pe, qe = bit(F[c].p, rho), bit(F[c].q, rho)
            for e in range(k2):
                pe ^= bit(K2[e].q, rho) & bit(F[c].p, k1 + e)
            p |= pe << c
            q |= qe << c
        for e in range(k2):
            p |= bit(K2[e].q, rho) << (k1 + e)
        p |= 1 << rho
        out.append(MixedVector(r, s, b, p, q))
    # [0 0 | uA^t  uI  0]
    for e in range(k2):
        q = sum(bit(F[c].p, k1 + e) << c for c in range(k1)) | (1 << (k1 + e))
        out.append(MixedVector(r, s, 0, 0, q))
    return GeneratorMatrix(r, s, tuple(sf.unpermute(v) for v in out))


def dual(code: EnumeratedCode, cap: int | None = None) -> EnumeratedCode:
    return span(parity_check(standard_form(code.generators)), cap=cap)


# ----------------------------------------------------------------------------
# weights


@dataclass(frozen=True)
class WeightEnumerator:
    """Homogeneous W(x, y) = sum_w A_w x^(n-w) y^w."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.n + 1:
            raise ValueError("need n+1 coefficients")

    @property
    def size(self) -> int:
        return sum(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for w, a in enumerate(self.coeffs):
            if not a:
                continue
            xe, ye = self.n - w, w
            mono = "".join(
                sym if e == 1 else f"{sym}^{e}" for sym, e in (("x", xe), ("y", ye)) if e
            ) or "1"
            terms.append(mono if a == 1 else f"{a}{mono}")
        return " + ".join(terms) if terms else "0"


def weight_enumerator(code: EnumeratedCode) -> WeightEnumerator:
    counts = [0] * (code.n + 1)
    for w in code.weights:
        counts[w] += 1
    return WeightEnumerator(code.n, tuple(counts))


def krawtchouk(n: int, j: int, w: int) -> int:
    return sum((-1) ** i * comb(w, i) * comb(n - w, j - i) for i in range(j + 1))


def macwilliams_transform(we: WeightEnumerator, code_size: int) -> WeightEnumerator:
    """Coefficients of W(x+y, x-y) / |C|, checked to be integral."""
    if code_size != we.size:
        raise ValueError(f"code size {code_size} disagrees with enumerator total {we.size}")
    n = we.n
    out = []
    for j in range(n + 1):
        total = sum(a * krawtchouk(n, j, w) for w, a in enumerate(we.coeffs) if a)
        val = Fraction(total, code_size)
        if val.denominator != 1 or val < 0:
            raise NonIntegerResult(f"coefficient of y^{j} is {val}")
        out.append(int(val))
    return WeightEnumerator(n, tuple(out))


def min_distance(code: EnumeratedCode) -> int:
    nonzero = [w for w in code.weights if w]
    if not nonzero:
        raise ZeroCode("the zero code has no minimum distance")
    return min(nonzero)


def gray_image_params(code: EnumeratedCode) -> tuple[int, int, int]:
    if len(code) < 2:
        raise ZeroCode("the zero code has no minimum distance")
    k = len(code).bit_length() - 1
    assert 1 << k == len(code)
    return code.n, k, min_distance(code)


def is_separable(code: EnumeratedCode) -> bool:
    """C equals the product of its binary and ring punctured codes."""
    mask_r = (1 << code.r) - 1
    cr = {w & mask_r for w in code.words}
    cs = {w >> code.r for w in code.words}
    return len(cr) * len(cs) == len(code)

