from fractions import Fraction

import pytest

from z2z2u.bounds import OPTIMAL_CATALOG, bounds_report, optimality_lookup, plotkin, sphere_packing
from z2z2u.code import dual, gray_image_params, span
from z2z2u.errors import ZeroCode
from z2z2u.matrixio import parse_matrix
from z2z2u.oneweight import is_one_weight, search_templates
from z2z2u.reproduce import MIXED_EXAMPLE, PERFECT_CODE, PERFECT_DUAL
from z2z2u.vector import MixedVector


def test_perfect_code():
    rep = sphere_packing(span(parse_matrix(PERFECT_CODE)))
    assert (rep.n, rep.k, rep.d, rep.t) == (7, 4, 3, 1)
    assert rep.sphere_packing_lhs == 16 * 8 == rep.sphere_packing_rhs == 128
    assert rep.is_perfect


def test_dual_of_perfect_code_attains_plotkin():
    d = dual(span(parse_matrix(PERFECT_CODE)))
    assert d == span(parse_matrix(PERFECT_DUAL))
    rep = plotkin(*gray_image_params(d))
    assert rep.plotkin_bound == Fraction(8) and rep.attains_plotkin
    assert is_one_weight(d) == 4


def test_worked_example_not_perfect():
    rep = sphere_packing(span(parse_matrix(MIXED_EXAMPLE)))
    assert (rep.sphere_packing_lhs, rep.sphere_packing_rhs, rep.is_perfect) == (192, 2048, False)


def test_full_space_is_perfect():
    rows = [MixedVector(3, 0, 1 << i) for i in range(3)]
    rep = sphere_packing(span(rows))
    assert rep.t == 0 and rep.is_perfect


def test_zero_code():
    with pytest.raises(ZeroCode):
        sphere_packing(span([MixedVector(1, 1)]))


def test_plotkin_cases():
    rep = plotkin(21, 3, 12)
    assert rep.plotkin_bound == 8 and rep.attains_plotkin and rep.plotkin_case == "d>n/2"
    assert not plotkin(8, 2, 3).plotkin_applicable
    half = plotkin(6, 2, 3)
    assert half.plotkin_bound == 24 and "4n form" in half.plotkin_case and not half.attains_plotkin


def test_optimality_lookup():
    assert optimality_lookup(45, 4, 24) is True
    assert optimality_lookup(49, 3, 28) is True
    assert optimality_lookup(45, 4, 23) is False
    assert optimality_lookup(11, 4, 3) is None
    assert len(OPTIMAL_CATALOG) == 7


def test_sphere_packing_and_plotkin_attainment_over_templates():
    for r in range(1, 5):
        for s in range(1, 4):
            for _, g in search_templates(r, s, 3):
                code = span(g)
                rep = bounds_report(code)
                assert rep.sphere_packing_lhs <= rep.sphere_packing_rhs
                if rep.attains_plotkin:
                    assert is_one_weight(code) is not None


def test_report_dict_keys():
    d = bounds_report(span(parse_matrix(PERFECT_CODE))).to_dict()
    assert d["isPerfect"] is True and d["plotkinApplicable"] is False
    assert set(d) >= {"n", "k", "d", "t", "spherePackingLHS", "spherePackingRHS", "plotkinBound",
                      "attainsPlotkin", "optimalPerCatalog"}
