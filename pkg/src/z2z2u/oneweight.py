"""One-weight (constant-weight) codes: detection, structural checks, construction."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator, Sequence

from .code import (
    CodeType,
    EnumeratedCode,
    GeneratorMatrix,
    StandardForm,
    dual,
    is_separable,
    macwilliams_transform,
    min_distance,
    span,
    standard_form,
    weight_enumerator,
)
from .errors import NotOneWeight, ZeroCode, ZeroColumn
from .ring import U, W as _W
from .vector import MixedVector, gray_int, scalar_mul

__all__ = [
    "OneWeightReport",
    "is_one_weight",
    "is_equidistant",
    "classify",
    "sum_of_weights",
    "row_structure_check",
    "k1_bound_check",
    "replicate",
    "all_ones_u",
    "search_templates",
]


def is_one_weight(code: EnumeratedCode) -> int | None:
    """The common weight of the nonzero codewords, or None."""
    if len(code) < 2:
        raise ZeroCode("one-weight is undefined for the zero code")
    ws = {w for w in code.weights if w}
    return ws.pop() if len(ws) == 1 else None


def is_equidistant(code: EnumeratedCode) -> int | None:
    """The common pairwise distance, or None.  Quadratic; for small codes."""
    ds = {(a ^ b).bit_count() for a, b in combinations(code.words, 2)}
    return ds.pop() if len(ds) == 1 else None


def all_ones_u(r: int, s: int) -> MixedVector:
    """The vector (1...1 | u...u)."""
    return MixedVector(r, s, (1 << r) - 1, 0, (1 << s) - 1)


def sum_of_weights(code: EnumeratedCode) -> int:
    """Total weight over all codewords; equals |C|(r+2s)/2 without zero columns."""
    if code.has_zero_column():
        raise ZeroColumn("the code has an identically zero coordinate")
    total = sum(code.weights)
    expected = len(code) * code.n // 2
    if total != expected:
        raise AssertionError(f"weight sum {total} != |C|(r+2s)/2 = {expected}")
    return total


def row_structure_check(gens: GeneratorMatrix | Sequence[MixedVector], m: int) -> list[str]:
    """Unit-pattern facts that every generator matrix of a one-weight code obeys.

    (i) each row's ring block has 0 or m/2 units; (ii) two free rows have
    their units in the same positions; (iii) two free rows agree on exactly
    m/4 of those positions and are opposite (1 vs 1+u) on the other m/4.
    Item (iii) is only checked for pairs w != (1+u)v, since for w = (1+u)v
    every unit is opposite.
    """
    rows = list(gens)
    out = []
    for idx, v in enumerate(rows):
        units = v.p.bit_count()
        if units and 2 * units != m:
            out.append(f"(i) row {idx}: {units} units, expected 0 or {m}/2")
    free = [(i, v) for i, v in enumerate(rows) if v.p]
    for (i, v), (j, w) in combinations(free, 2):
        if v == w:
            continue
        if v.p != w.p:
            out.append(f"(ii) rows {i},{j}: unit positions differ")
            continue
        if w == scalar_mul(_W, v):
            continue
        same = (v.p & ~(v.q ^ w.q)).bit_count()
        opposite = (v.p & (v.q ^ w.q)).bit_count()
        if not (4 * same == m and 4 * opposite == m):
            out.append(f"(iii) rows {i},{j}: {same} equal / {opposite} opposite units, expected {m}/4 each")
    return out


def k1_bound_check(sf: StandardForm) -> bool:
    """k1 <= 1 and the standard form has the one-weight block shape."""
    t = sf.code_type
    if t.k1 > 1:
        return False
    k0_mask = (1 << t.k0) - 1
    for v in sf.k0_rows:
        if v.p:
            return False
    for v in sf.k2_rows:
        if v.bin or v.p:
            return False
    for v in sf.free_rows:
        if v.bin & k0_mask or not v.p & 1:
            return False
        k2_mask = ((1 << t.k2) - 1) << t.k1
        if v.q & (k2_mask | 1):
            return False
    return True


def replicate(gens: GeneratorMatrix | Sequence[MixedVector], gamma: int) -> GeneratorMatrix:
    """Copy the binary block and the ring block gamma times each."""
    if not isinstance(gens, GeneratorMatrix):
        gens = GeneratorMatrix.of(gens)
    if gamma < 1:
        raise ValueError("gamma must be a positive integer")
    code = span(gens)
    if len(code) < 2 or is_one_weight(code) is None:
        raise NotOneWeight("replication needs a one-weight code")
    r, s = gens.r, gens.s

    def rep(x: int, width: int) -> int:
        return sum(x << (width * g) for g in range(gamma))

    rows = tuple(MixedVector(gamma * r, gamma * s, rep(v.bin, r), rep(v.p, s), rep(v.q, s)) for v in gens)
    return GeneratorMatrix(gamma * r, gamma * s, rows)


@dataclass
class OneWeightReport:
    is_one_weight: bool
    m: int | None = None
    alpha: int | None = None
    code_type: CodeType | None = None
    dual_distance: int | None = None
    dual_distance_class: str | None = None
    odd_case_form: bool = False
    lam: int | None = None
    kappa: int | None = None
    violations: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "isOneWeight": self.is_one_weight,
            "m": self.m,
            "alpha": self.alpha,
            "type": list(self.code_type.as_tuple()) if self.code_type else None,
            "dualDistance": self.dual_distance,
            "dualDistanceClass": self.dual_distance_class,
            "oddCaseForm": self.odd_case_form,
            "lambda": self.lam,
            "kappa": self.kappa,
            "violations": list(self.violations),
        }


def _distance_class(d: int | None) -> str:
    if d is None or d > 3:
        return ">=3"
    if d == 3:
        return "=3"
    if d == 2:
        return ">=2"
    return "other"


def classify(code: EnumeratedCode, gens: GeneratorMatrix | None = None) -> OneWeightReport:
    """Check the weight formula, odd-weight form and dual-distance facts on a one-weight code."""
    m = is_one_weight(code)
    if m is None:
        raise NotOneWeight("the code has several nonzero weights")
    if code.has_zero_column():
        raise ZeroColumn("the code has an identically zero coordinate")
    gens = code.generators if gens is None else gens
    sf = standard_form(gens)
    t = sf.code_type
    size, n, K = len(code), code.n, t.log_size
    rep = OneWeightReport(True, m=m, code_type=t)
    v = rep.violations
    if t.size != size:
        v.append(f"type {t} predicts {t.size} words, enumerated {size}")

    if (2 * m) % size:
        v.append(f"weight formula: m={m} is not a multiple of |C|/2={size // 2}")
    else:
        rep.alpha = alpha = 2 * m // size
        if n != alpha * (size - 1):
            v.append(f"weight formula: n={n} != alpha(2^{K}-1) with alpha={alpha}")

    try:
        sum_of_weights(code)
    except AssertionError as exc:
        v.append(f"sum of weights: {exc}")

    if m % 2:
        target = span([all_ones_u(code.r, code.s)])
        rep.odd_case_form = code == target
        if code.r % 2 == 0:
            v.append("odd weight with even r")
        if not rep.odd_case_form:
            v.append("odd weight but code is not <(1..1|u..u)>")
        if m != n:
            v.append(f"odd weight {m} != r+2s = {n}")

    if t.k1 > 1 or not k1_bound_check(sf):
        v.append(f"k1 bound: k1={t.k1}")
    if code.r and code.s and is_separable(code):
        v.append("separable one-weight code")
    v.extend(row_structure_check(sf.g_std, m))

    dcode = dual(code)
    rep.dual_distance = min_distance(dcode) if len(dcode) > 1 else None
    rep.dual_distance_class = _distance_class(rep.dual_distance)
    dd = rep.dual_distance if rep.dual_distance is not None else n + 1
    if dd < 2:
        v.append(f"dual distance {dd} < 2")
    if rep.alpha is not None:
        if (dd >= 3) != (rep.alpha == 1):
            v.append(f"dual distance {dd} with alpha={rep.alpha}")
        if rep.alpha == 1 and size >= 4 and dd != 3:
            v.append(f"alpha=1, |C|={size} but dual distance {dd} != 3")

        bw = macwilliams_transform(weight_enumerator(code), size).coeffs
        if bw != weight_enumerator(dcode).coeffs:
            v.append("transformed enumerator disagrees with enumerated dual")
        rep.lam = bw[2] if n >= 2 else 0
        if rep.lam != rep.alpha * (rep.alpha - 1) * (size - 1) // 2:
            v.append(f"lambda={rep.lam} disagrees with alpha(alpha-1)(|C|-1)/2")
        if rep.alpha == 1 and n >= 3:
            rep.kappa = bw[3]
            if 6 * rep.kappa != (size - 1) * (size - 2):
                v.append(f"kappa={rep.kappa} disagrees with (|C|-1)(|C|-2)/6")
    return rep


# ----------------------------------------------------------------------------
# exhaustive search over standard-form templates


def _template_rows(r: int, s: int, k0: int, k1: int, k2: int) -> list[list[MixedVector]]:
    """Candidate rows per template position, in template row order."""
    rho = s - k1 - k2
    off = k1 + k2
    slots: list[list[MixedVector]] = []
    for i in range(k0):
        slots.append([
            MixedVector(r, s, (1 << i) | (a1 << k0), 0, t << off)
            for a1, t in product(range(1 << (r - k0)), range(1 << rho))
        ])
    for c in range(k1):
        slots.append([
            MixedVector(r, s, sv << k0, (1 << c) | (a << k1) | (b1 << off), b2 << off)
            for sv, a, b1, b2 in product(range(1 << (r - k0)), range(1 << k2), range(1 << rho), range(1 << rho))
        ])
    for e in range(k2):
        slots.append([MixedVector(r, s, 0, 0, (1 << (k1 + e)) | (d << off)) for d in range(1 << rho)])
    return slots


def search_templates(r: int, s: int, max_log_size: int) -> Iterator[tuple[CodeType, GeneratorMatrix]]:
    """Every one-weight code whose generator matrix is a standard-form template.

    Covers all one-weight codes of shape (r, s) with log2|C| <= max_log_size up
    to block-preserving column permutation.  Subcodes of a one-weight code are
    one-weight, so partial spans are pruned as soon as a second weight shows up.
    """
    for k0 in range(r + 1):
        for k1 in range(s + 1):
            for k2 in range(s - k1 + 1):
                K = k0 + 2 * k1 + k2
                if K == 0 or K > max_log_size:
                    continue
                slots = _template_rows(r, s, k0, k1, k2)
                t = CodeType(r, s, k0, k1, k2)
                for rows in _dfs(slots, [], [0], None):
                    yield t, GeneratorMatrix(r, s, tuple(rows))


def _dfs(slots, chosen, words, m) -> Iterator[list[MixedVector]]:
    depth = len(chosen)
    if depth == len(slots):
        yield list(chosen)
        return
    for v in slots[depth]:
        g1 = gray_int(v)
        g2 = gray_int(scalar_mul(U, v))
        new = [g1] if not g2 else [g1, g2, g1 ^ g2]
        mm = m if m is not None else g1.bit_count()
        ok = True
        ext = []
        for x in new:
            for w in words:
                y = w ^ x
                if y.bit_count() != mm:
                    ok = False
                    break
                ext.append(y)
            if not ok:
                break
        if ok:
            chosen.append(v)
            yield from _dfs(slots, chosen, words + ext, mm)
            chosen.pop()

