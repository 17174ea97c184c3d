"""Registry of published results and theorem suites, run by ``z2z2u verify-paper``.

Each check returns ``(ok, detail)``; failures are data, never exceptions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .bounds import bounds_report, optimality_lookup, plotkin
from .code import (
    dual,
    gray_image_params,
    macwilliams_transform,
    min_distance,
    parity_check,
    span,
    standard_form,
    weight_enumerator,
)
from .cyclic import (
    CyclicGenerators,
    _errors,
    build_one_weight_cyclic,
    cyclic_span,
    cyclic_type,
    search_one_weight,
    spanning_set,
    validate_generators,
)
from .errors import Z2Z2uError
from .matrixio import parse_matrix
from .oneweight import classify, is_one_weight, replicate, row_structure_check, search_templates
from .poly import BinaryPolynomial, divisors_of_xn_minus_1, parse_poly, poly_gcd, xn_minus_1
from .vector import parse_vector

__all__ = ["Check", "CheckResult", "CHECKS", "run_checks", "TABLE_ROWS"]

MIXED_EXAMPLE = """r=3 s=4
1 1 0 | 0 u u u
0 1 1 | 1 w u 0
0 1 0 | u u u 0
"""

MIXED_EXAMPLE_STD = """r=3 s=4
1 0 0 | 0 u 0 u
0 1 0 | 0 0 u 0
0 0 1 | 1 w 0 0
"""

MIXED_EXAMPLE_H = """r=3 s=4
0 0 1 | u 0 0 0
1 0 0 | w 1 0 0
0 1 0 | 0 0 1 0
1 0 0 | 0 0 0 1
"""

MIXED_EXAMPLE_WORDS = (
    "(0,0,0|0,0,0,0) (1,0,0|0,u,0,u) (0,1,0|0,0,u,0) (0,0,1|1,1+u,0,0) (0,0,0|u,u,0,0) "
    "(0,0,1|1+u,1,0,0) (1,1,0|0,u,u,u) (1,0,1|1,1,0,u) (0,1,1|1,1+u,u,0) (1,1,1|1,1,u,u) "
    "(1,0,0|u,0,0,u) (0,1,0|u,u,u,0) (1,1,0|u,0,u,u) (1,0,1|1+u,1+u,0,u) (0,1,1|1+u,1,u,0) "
    "(1,1,1|1+u,1+u,u,u)"
).split()

# coefficient lists A_0..A_11
MIXED_EXAMPLE_WC = [0, 0, 0, 3, 1, 2, 4, 1, 2, 2, 0, 0]
MIXED_EXAMPLE_WDUAL = [0, 0, 6, 8, 16, 32, 26, 24, 15, 0, 0, 0]
for _w in (MIXED_EXAMPLE_WC, MIXED_EXAMPLE_WDUAL):
    _w[0] = 1

PERFECT_CODE = """r=3 s=2
1 0 1 | 0 u
0 1 0 | 0 u
0 0 1 | 1 w
"""

PERFECT_DUAL = """r=3 s=2
1 0 1 | u 0
1 1 0 | w 1
"""

SIMPLEX_IMAGE = """r=3 s=2
1 0 1 | 0 u
0 1 1 | 1 w
"""


@dataclass(frozen=True)
class TableRow:
    r: int
    s: int
    l: str
    a: str
    listed_type: str
    gray: tuple[int, int, int]

    def generators(self) -> CyclicGenerators:
        return CyclicGenerators.make(self.r, self.s, parse_poly(self.l), None, parse_poly(self.a))


_L31 = "1+x^2+x^4+x^5+x^6+x^8+x^9+x^13+x^14+x^15+x^16+x^17+x^20+x^21+x^23+x^26"
TABLE_ROWS = (
    TableRow(7, 21, "1+x+x^2+x^4", "1+x+x^2+x^4+x^7+x^8+x^9+x^11+x^14+x^15+x^16+x^18",
             "[7,21;0;0,3]", (49, 3, 28)),
    TableRow(31, 31, _L31, _L31, "[31,31;0;0,5]", (93, 5, 48)),
    TableRow(27, 15,
             "1+x+x^3+x^4+x^6+x^7+x^9+x^10+x^12+x^13+x^15+x^16+x^18+x^19+x^21+x^22+x^24+x^25",
             "1+x+x^3+x^4+x^6+x^7+x^9+x^10+x^12+x^13", "[27,15;0;0,2]", (57, 2, 38)),
    TableRow(35, 21,
             "1+x^2+x^3+x^4+x^7+x^9+x^10+x^11+x^14+x^16+x^17+x^18+x^21+x^23+x^24+x^25+x^28+x^30+x^31+x^32",
             "1+x^2+x^3+x^4+x^7+x^9+x^10+x^11+x^14+x^16+x^17+x^18", "[35,21;0,0,3]", (77, 3, 44)),
)


@dataclass(frozen=True)
class Check:
    key: str
    run: Callable[[], tuple[bool, str]]
    slow: bool = False


@dataclass
class CheckResult:
    key: str
    ok: bool
    detail: str
    seconds: float


def _coeffs(we) -> list[int]:
    return list(we.coeffs)


# ---------------------------------------------------------------------------
# worked example over Z2^3 x R^4


def _mixed_code():
    return span(parse_matrix(MIXED_EXAMPLE))


def _mixed_standard_form() -> tuple[bool, str]:
    sf = standard_form(parse_matrix(MIXED_EXAMPLE))
    want = parse_matrix(MIXED_EXAMPLE_STD).rows
    ok = sf.g_std.rows == want and sf.is_identity_permutation and sf.code_type.as_tuple() == (3, 4, 2, 1, 0)
    return ok, f"type {sf.code_type}"


def _mixed_words() -> tuple[bool, str]:
    code = _mixed_code()
    want = {parse_vector(w) for w in MIXED_EXAMPLE_WORDS}
    got = set(code.codewords)
    return got == want and len(code) == 16, f"|C|={len(code)}"


def _mixed_parity_check() -> tuple[bool, str]:
    h = parity_check(standard_form(parse_matrix(MIXED_EXAMPLE)))
    want = parse_matrix(MIXED_EXAMPLE_H).rows
    d = standard_form(h).code_type
    return h.rows == want and d.as_tuple() == (3, 4, 1, 3, 0), f"dual type {d}"


def _mixed_wc() -> tuple[bool, str]:
    we = weight_enumerator(_mixed_code())
    return _coeffs(we) == MIXED_EXAMPLE_WC, str(we)


def _mixed_wdual() -> tuple[bool, str]:
    code = _mixed_code()
    via_identity = macwilliams_transform(weight_enumerator(code), len(code))
    direct = weight_enumerator(dual(code))
    ok = _coeffs(via_identity) == MIXED_EXAMPLE_WDUAL == _coeffs(direct)
    return ok, str(via_identity)


def _mixed_gray() -> tuple[bool, str]:
    code = _mixed_code()
    a, b = gray_image_params(code), gray_image_params(dual(code))
    return (a, b) == ((11, 4, 3), (11, 7, 2)), f"{list(a)} and {list(b)}"


# ---------------------------------------------------------------------------
# one-weight examples


def _one_weight_small() -> tuple[bool, str]:
    code = span([parse_vector("(1,1|1+u,1+u)")])
    rep = classify(code)
    dcode = dual(code)
    d = min_distance(dcode)
    ok = (
        rep.m == 4
        and rep.code_type.as_tuple() == (2, 2, 0, 1, 0)
        and is_one_weight(dcode) is None
        and d == 2
        and standard_form(dcode.generators).code_type.as_tuple() == (2, 2, 2, 1, 0)
        and not rep.violations
    )
    return ok, f"m={rep.m}, dual distance {d}"


def _simplex_image() -> tuple[bool, str]:
    gm = parse_matrix(SIMPLEX_IMAGE)
    code = span(gm)
    t = standard_form(gm).code_type
    params = gray_image_params(code)
    return is_one_weight(code) == 4 and params == (7, 3, 4) and t.as_tuple() == (3, 2, 1, 1, 0), f"{list(params)}"


def _replication() -> tuple[bool, str]:
    base = parse_matrix(SIMPLEX_IMAGE)
    t0 = standard_form(base).code_type
    out = []
    for gamma, want in ((2, 8), (3, 12)):
        g = replicate(base, gamma)
        t = standard_form(g).code_type
        m = is_one_weight(span(g))
        out.append(m == want and (t.k0, t.k1, t.k2) == (t0.k0, t0.k1, t0.k2))
    return all(out), "weights 8 and 12"


# ---------------------------------------------------------------------------
# cyclic examples and table


def _cyclic_case(cg: CyclicGenerators, m: int, gray: tuple[int, int, int] | None, ctype=None):
    def run() -> tuple[bool, str]:
        code = cyclic_span(cg)
        got_m = is_one_weight(code)
        params = gray_image_params(code)
        t = cyclic_type(cg).code_type
        ok = got_m == m and (gray is None or params == gray)
        ok = ok and t == standard_form(spanning_set(cg)).code_type
        if ctype is not None:
            ok = ok and t.as_tuple() == ctype
        if gray is not None:
            ok = ok and optimality_lookup(*params) is True
        return ok, f"m={got_m}, Gray {list(params)}, type {t}"
    return run


def _cyclic_7_matrix() -> tuple[bool, str]:
    cg = CyclicGenerators.make(7, 7, parse_poly("1+x+x^2+x^4"), None, parse_poly("1+x+x^2+x^4"))
    want = parse_matrix("""r=7 s=7
1 1 1 0 1 0 0 | u u u 0 u 0 0
0 1 1 1 0 1 0 | 0 u u u 0 u 0
0 0 1 1 1 0 1 | 0 0 u u u 0 u
""").rows
    return spanning_set(cg).rows == want, "3 x 14 spanning rows"


def _cyclic_15_matrix() -> tuple[bool, str]:
    p = parse_poly("1+x^3+x^4+x^6+x^8+x^9+x^10+x^11")
    rows = spanning_set(CyclicGenerators.make(15, 15, p, None, p)).rows
    ok = len(rows) == 4 and all(v.bin == p.bits << i and v.q == p.bits << i and v.p == 0 for i, v in enumerate(rows))
    return ok, "4 x 30 spanning rows"


def _listed_log_size(text: str) -> int:
    """log2 size of a printed (r,s;k0,k1,k2) tuple, whatever its punctuation."""
    k0, k1, k2 = (int(x) for x in text.strip("[]()").replace(";", ",").split(",")[2:])
    return k0 + 2 * k1 + k2


def _table_row(row: TableRow):
    def run() -> tuple[bool, str]:
        cg = row.generators()
        code = cyclic_span(cg)
        t = cyclic_type(cg).code_type
        params = gray_image_params(code)
        k = row.gray[1]
        ok = (
            params == row.gray
            and is_one_weight(code) == row.gray[2]
            and t.as_tuple() == (row.r, row.s, k, 0, 0)
            and standard_form(spanning_set(cg)).code_type == t
            and optimality_lookup(*params) is True
            and t.log_size == _listed_log_size(row.listed_type)
        )
        return ok, f"Gray {list(params)}, type {t} (listed {row.listed_type}, same size)"
    return run


# ---------------------------------------------------------------------------
# bounds


def _perfect() -> tuple[bool, str]:
    gm = parse_matrix(PERFECT_CODE)
    rep = bounds_report(span(gm))
    t = standard_form(gm).code_type
    ok = rep.is_perfect and rep.sphere_packing_lhs == 128 == rep.sphere_packing_rhs and t.as_tuple() == (3, 2, 2, 1, 0)
    return ok, f"{rep.sphere_packing_lhs} = {rep.sphere_packing_rhs}"


def _plotkin_dual() -> tuple[bool, str]:
    code = span(parse_matrix(PERFECT_CODE))
    d = dual(code)
    given = span(parse_matrix(PERFECT_DUAL))
    n, k, dist = gray_image_params(d)
    pk = plotkin(n, k, dist)
    ok = d == given and pk.attains_plotkin and pk.plotkin_bound == 8 and len(d) == 8 and is_one_weight(d) == 4
    return ok, f"bound {pk.plotkin_bound}, size {len(d)}"


# ---------------------------------------------------------------------------
# theorem suites


def one_weight_template_suite(max_r: int = 6, max_s: int = 4, max_log: int = 4) -> tuple[int, int, list[str]]:
    """Exhaustive template search; returns (codes, codes without zero column, violations)."""
    total = full = 0
    bad: list[str] = []
    for r in range(1, max_r + 1):
        for s in range(1, max_s + 1):
            for t, gm in search_templates(r, s, max_log):
                total += 1
                code = span(gm)
                m = is_one_weight(code)
                issues = row_structure_check(gm, m)
                if t.k1 > 1:
                    issues.append(f"k1={t.k1}")
                if not code.has_zero_column():
                    full += 1
                    issues += classify(code, gm).violations
                bad.extend(f"{t}: {x}" for x in issues)
    return total, full, bad


def _template_suite() -> tuple[bool, str]:
    total, full, bad = one_weight_template_suite()
    return not bad, f"{total} codes, {full} without zero columns, {len(bad)} violations"


def cyclic_classification(r: int, s: int) -> list[str]:
    """Problems with the g != 0 search hits at (r, s); empty when the classification holds."""
    hits = search_one_weight(r, s, g_zero=False)
    out = []
    if r == s and not hits:
        out.append(f"({r},{s}) search found no codes")
    for h in hits:
        if r > s:
            out.append(f"r>s hit {h.generators.describe()}")
        elif (h.code_type.as_tuple(), h.m) != ((s, s, 0, 1, 0), 2 * s):
            out.append(f"({r},{s}) hit with type {h.code_type}, m={h.m}")
    return out


def _classification(pairs: tuple[tuple[int, int], ...]):
    def run() -> tuple[bool, str]:
        bad = [x for r, s in pairs for x in cyclic_classification(r, s)]
        return not bad, f"{len(pairs)} shapes, {len(bad)} problems"
    return run


def type_formula_sweep(max_r: int, max_s: int) -> tuple[int, list[str]]:
    """Compare the degree formula with the standard-form type over valid generator tuples."""
    count = 0
    bad: list[str] = []
    zero = BinaryPolynomial(0)
    for r in range(1, max_r + 1):
        dr = divisors_of_xn_minus_1(r)
        for s in range(1, max_s + 1, 2):
            ds = divisors_of_xn_minus_1(s)
            xs = xn_minus_1(s)
            for f in dr:
                for g in ds:
                    for a in ds:
                        if not a.divides(g):
                            continue
                        # l must make f divide ((x^s-1)/a) l; these are all such l mod f
                        base = f // poly_gcd(f, xs // a)
                        ls = sorted({zero} | {(q * base) % f for q in dr}, key=lambda p: p.bits)
                        for l in ls:
                            cg = CyclicGenerators(r, s, f, l, g, a)
                            if _errors(validate_generators(cg)):
                                continue
                            count += 1
                            want = cyclic_type(cg, validate=False).code_type
                            got = standard_form(spanning_set(cg, validate=False), verify=False).code_type
                            if want != got:
                                bad.append(f"{cg.describe()}: formula {want}, standard form {got}")
    return count, bad


def _type_sweep(max_r: int, max_s: int):
    def run() -> tuple[bool, str]:
        count, bad = type_formula_sweep(max_r, max_s)
        return not bad and count > 0, f"{count} tuples, {len(bad)} mismatches"
    return run


def _plotkin_hits() -> tuple[bool, str]:
    bad = checked = 0
    for r in range(1, 5):
        for s in range(1, 4):
            for _, gm in search_templates(r, s, 3):
                code = span(gm)
                n, k, d = gray_image_params(code)
                if plotkin(n, k, d).attains_plotkin:
                    checked += 1
                    bad += is_one_weight(code) is None
    return bad == 0 and checked > 0, f"{checked} codes attain Plotkin, {bad} not one-weight"


# ---------------------------------------------------------------------------


def _build() -> tuple[Check, ...]:
    e7 = build_one_weight_cyclic(7)
    e9 = build_one_weight_cyclic(9)
    p7 = parse_poly("1+x+x^2+x^4")
    p15 = parse_poly("1+x^3+x^4+x^6+x^8+x^9+x^10+x^11")
    checks = [
        Check("worked example: standard form and type", _mixed_standard_form),
        Check("worked example: 16 codewords", _mixed_words),
        Check("worked example: parity-check matrix and dual type", _mixed_parity_check),
        Check("worked example: W_C", _mixed_wc),
        Check("worked example: W_C-dual (MacWilliams and direct)", _mixed_wdual),
        Check("worked example: Gray images", _mixed_gray),
        Check("one-weight: <(1,1|1+u,1+u)> and its dual", _one_weight_small),
        Check("one-weight: simplex Gray image [7,3,4]", _simplex_image),
        Check("one-weight: replication gamma=2,3", _replication),
        Check("cyclic: R7,7 all-ones, m=14", _cyclic_case(e7, 14, None, (7, 7, 0, 1, 0))),
        Check("cyclic: R9,9 all-ones, [27,2,18]", _cyclic_case(e9, 18, (27, 2, 18), (9, 9, 0, 1, 0))),
        Check("cyclic: R7,7 g=0, [21,3,12]", _cyclic_case(CyclicGenerators.make(7, 7, p7, None, p7), 12, (21, 3, 12))),
        Check("cyclic: R7,7 g=0 spanning rows", _cyclic_7_matrix),
        Check("cyclic: R15,15 g=0, [45,4,24]", _cyclic_case(CyclicGenerators.make(15, 15, p15, None, p15), 24,
                                                         (45, 4, 24), (15, 15, 4, 0, 0))),
        Check("cyclic: R15,15 spanning rows", _cyclic_15_matrix),
    ]
    for i, row in enumerate(TABLE_ROWS, 1):
        checks.append(Check(f"table row {i}: {list(row.gray)}", _table_row(row)))
    checks += [
        Check("bounds: (3,2;2,1,0) code is perfect", _perfect),
        Check("bounds: its dual attains Plotkin and is one-weight", _plotkin_dual),
        Check("bounds: Plotkin attainment implies one weight", _plotkin_hits),
        Check("suite: one-weight theorems over templates", _template_suite),
        Check("suite: cyclic classification r=s, g!=0", _classification(((3, 3), (5, 5), (7, 7), (9, 9)))),
        Check("suite: no one-weight cyclic codes for r>s, g!=0",
              _classification(tuple((r, s) for s in (3, 5, 7) for r in range(s + 1, 10)))),
        Check("suite: type formula, r,s <= 9", _type_sweep(9, 9)),
        Check("suite: type formula, r,s <= 15", _type_sweep(15, 15), slow=True),
    ]
    return tuple(checks)


CHECKS = _build()


def run_checks(include_slow: bool = False, match: str | None = None) -> Iterator[CheckResult]:
    for c in CHECKS:
        if c.slow and not include_slow:
            continue
        if match and match not in c.key:
            continue
        t0 = time.perf_counter()
        try:
            ok, detail = c.run()
        except (Z2Z2uError, ValueError, AssertionError) as exc:
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        yield CheckResult(c.key, ok, detail, time.perf_counter() - t0)
