import random

import pytest

from z2z2u.code import CodeType, standard_form
from z2z2u.cyclic import (
    CyclicGenerators,
    all_ones,
    build_one_weight_cyclic,
    cyclic_span,
    cyclic_type,
    module_closure,
    search_one_weight,
    spanning_set,
    validate_generators,
)
from z2z2u.errors import CapExceeded, ValidationFailed
from z2z2u.oneweight import is_one_weight
from z2z2u.poly import BinaryPolynomial, divisors_of_xn_minus_1, parse_poly, poly_gcd, xn_minus_1
from z2z2u.reproduce import TABLE_ROWS
from z2z2u.vector import MixedVector, cyclic_shift, gray_int


def _valid_tuples(r, s):
    zero = BinaryPolynomial(0)
    dr, ds = divisors_of_xn_minus_1(r), divisors_of_xn_minus_1(s)
    xs = xn_minus_1(s)
    for f in dr:
        for g in ds:
            for a in ds:
                if not a.divides(g):
                    continue
                base = f // poly_gcd(f, xs // a)
                for l in sorted({zero} | {(q * base) % f for q in dr}, key=lambda p: p.bits):
                    cg = CyclicGenerators(r, s, f, l, g, a)
                    if all(c.ok or c.severity == "warning" for c in validate_generators(cg)):
                        yield cg


def test_build_one_weight_cyclic():
    for s in (3, 5, 7, 9):
        code = cyclic_span(build_one_weight_cyclic(s))
        assert is_one_weight(code) == 2 * s
        assert cyclic_type(build_one_weight_cyclic(s)).code_type == CodeType(s, s, 0, 1, 0)
    with pytest.raises(ValueError):
        build_one_weight_cyclic(4)


def test_all_ones_generator_row():
    rows = spanning_set(build_one_weight_cyclic(7)).rows
    assert rows == (MixedVector(7, 7, 0x7F, 0x7F, 0x7F),)


def test_spanning_set_seventh_roots():
    p = parse_poly("1+x+x^2+x^4")
    rows = spanning_set(CyclicGenerators.make(7, 7, p, None, p)).rows
    assert [str(v) for v in rows] == [
        "1 1 1 0 1 0 0 | u u u 0 u 0 0",
        "0 1 1 1 0 1 0 | 0 u u u 0 u 0",
        "0 0 1 1 1 0 1 | 0 0 u u u 0 u",
    ]


@pytest.mark.parametrize("r,s", [(1, 1), (2, 3), (3, 3), (4, 3), (3, 5), (6, 3), (5, 5)])
def test_span_matches_module_closure_and_is_shift_closed(r, s):
    tuples = list(_valid_tuples(r, s))
    random.Random(r * 100 + s).shuffle(tuples)
    for cg in tuples[:40]:
        code = cyclic_span(cg)
        seeds = [MixedVector(r, s, cg.f.reduce(r).bits, 0, 0) if not cg.f_absent else MixedVector(r, s),
                 MixedVector(r, s, cg.l.reduce(r).bits, (cg.g.reduce(s)).bits, cg.a.reduce(s).bits)]
        assert module_closure(r, s, seeds) == code
        words = code.word_set
        for v in code.codewords:
            assert gray_int(cyclic_shift(v)) in words


@pytest.mark.parametrize("r,s", [(r, s) for r in range(1, 8) for s in (1, 3, 5, 7)])
def test_type_formula_small(r, s):
    for cg in _valid_tuples(r, s):
        assert cyclic_type(cg).code_type == standard_form(spanning_set(cg)).code_type


def test_validation_messages():
    bad = CyclicGenerators.make(7, 7, parse_poly("1+x"), parse_poly("1+x^2"), parse_poly("1"))
    names = {c.name for c in validate_generators(bad) if not c.ok}
    assert "g | x^s-1" in names
    with pytest.raises(ValidationFailed):
        cyclic_span(bad)
    even = CyclicGenerators.make(3, 4, parse_poly("1"), None, parse_poly("1"))
    assert any(c.name == "s must be odd" and not c.ok for c in validate_generators(even))


def test_absent_f_product_condition_is_a_warning():
    cg = build_one_weight_cyclic(3)
    conds = validate_generators(cg)
    assert all(c.ok or c.severity == "warning" for c in conds)


def test_table_rows():
    for row in TABLE_ROWS:
        cg = row.generators()
        code = cyclic_span(cg)
        assert (code.n, code.log_size, is_one_weight(code)) == row.gray
        assert cyclic_type(cg).code_type == CodeType(row.r, row.s, row.gray[1], 0, 0)


def test_search_seven():
    hits = search_one_weight(7, 7)
    assert sorted(h.m for h in hits) == [12, 12, 14, 21]
    assert all(h.violations == [] for h in hits)
    assert [h.to_dict() for h in hits] == [h.to_dict() for h in search_one_weight(7, 7)]


def test_search_restricted_l_and_a():
    p = parse_poly("1+x+x^2+x^4")
    hits = search_one_weight(7, 7, g_nonzero=False, l_choices=[p], a_choices=[p])
    assert [(h.m, h.gray_params) for h in hits] == [(12, (21, 3, 12))]


def test_search_r_less_than_s_empty():
    assert search_one_weight(3, 9, g_zero=False) == []


def test_search_cap_reports_partial():
    with pytest.raises(CapExceeded) as info:
        search_one_weight(7, 7, max_tuples=5)
    assert isinstance(info.value.partial, list)


def test_search_rejects_even_s():
    with pytest.raises(ValueError):
        search_one_weight(3, 4)


def test_describe_conventions():
    d = build_one_weight_cyclic(3).describe()
    assert d["f"] == "absent"
    assert CyclicGenerators.make(3, 3, all_ones(3), None, all_ones(3)).describe()["g"] == "0"


def test_search_table_row_one_from_l_alone():
    hits = search_one_weight(7, 21, g_nonzero=False, l_choices=[parse_poly("1+x+x^2+x^4")])
    assert (49, 3, 28) in [h.gray_params for h in hits]


def test_search_three_hits_confirmed_by_closure():
    hits = search_one_weight(3, 3)
    assert hits
    for h in hits:
        cg = h.generators
        seed = MixedVector(3, 3, cg.l.reduce(3).bits, cg.g.reduce(3).bits, cg.a.reduce(3).bits)
        code = module_closure(3, 3, [seed])
        assert is_one_weight(code) == h.m
