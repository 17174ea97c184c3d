"""Sphere-packing and Plotkin checks on Gray-image parameters, and the optimality catalog."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .code import EnumeratedCode, gray_image_params

__all__ = [
    "BoundsReport",
    "OPTIMAL_CATALOG",
    "sphere_packing",
    "plotkin",
    "optimality_lookup",
    "bounds_report",
]

# Binary [n, k, d] parameters cited as distance-optimal.  Closed list.
OPTIMAL_CATALOG: frozenset[tuple[int, int, int]] = frozenset({
    (45, 4, 24),
    (27, 2, 18),
    (21, 3, 12),
    (49, 3, 28),
    (93, 5, 48),
    (57, 2, 38),
    (77, 3, 44),
})


@dataclass
class BoundsReport:
    n: int
    k: int
    d: int
    t: int = 0
    sphere_packing_lhs: int = 0
    sphere_packing_rhs: int = 0
    is_perfect: bool = False
    plotkin_applicable: bool = False
    plotkin_case: str | None = None
    plotkin_bound: Fraction | None = None
    attains_plotkin: bool = False
    optimal_per_catalog: bool | None = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "t": self.t,
            "spherePackingLHS": self.sphere_packing_lhs,
            "spherePackingRHS": self.sphere_packing_rhs,
            "isPerfect": self.is_perfect,
            "plotkinApplicable": self.plotkin_applicable,
            "plotkinCase": self.plotkin_case,
            "plotkinBound": None if self.plotkin_bound is None else str(self.plotkin_bound),
            "attainsPlotkin": self.attains_plotkin,
            "optimalPerCatalog": self.optimal_per_catalog,
        }


def _sphere(n: int, k: int, d: int) -> tuple[int, int, int]:
    t = (d - 1) // 2
    lhs = (1 << k) * sum(comb(n, j) for j in range(t + 1))
    return t, lhs, 1 << n


def sphere_packing(code: EnumeratedCode) -> BoundsReport:
    """|C| * sum_{j<=t} C(n, j) against 2^n; equality means perfect."""
    n, k, d = gray_image_params(code)
    t, lhs, rhs = _sphere(n, k, d)
    return BoundsReport(n, k, d, t=t, sphere_packing_lhs=lhs, sphere_packing_rhs=rhs, is_perfect=lhs == rhs)


def plotkin(n: int, k: int, d: int) -> BoundsReport:
    """Binary Plotkin bound.

    d > n/2 gives |C| <= 2d/(2d - n).  For d = n/2 the bound used is the
    q = 2 case of |C| <= 2qn, i.e. 4n, looser than the sharp 4d = 2n.
    """
    rep = BoundsReport(n, k, d)
    size = 1 << k
    if 2 * d > n:
        rep.plotkin_applicable = True
        rep.plotkin_case = "d>n/2"
        rep.plotkin_bound = Fraction(2 * d, 2 * d - n)
    elif 2 * d == n:
        rep.plotkin_applicable = True
        rep.plotkin_case = "d=n/2 (4n form)"
        rep.plotkin_bound = Fraction(4 * n)
    if rep.plotkin_applicable:
        rep.attains_plotkin = size == int(rep.plotkin_bound)
    return rep


def optimality_lookup(n: int, k: int, d: int) -> bool | None:
    """True if cataloged as optimal, False if a cataloged (n, k) has larger d, else None."""
    if (n, k, d) in OPTIMAL_CATALOG:
        return True
    for cn, ck, cd in OPTIMAL_CATALOG:
        if (cn, ck) == (n, k):
            return d >= cd
    return None


def bounds_report(code: EnumeratedCode) -> BoundsReport:
    rep = sphere_packing(code)
    pk = plotkin(rep.n, rep.k, rep.d)
    rep.plotkin_applicable = pk.plotkin_applicable
    rep.plotkin_case = pk.plotkin_case
    rep.plotkin_bound = pk.plotkin_bound
    rep.attains_plotkin = pk.attains_plotkin
    rep.optimal_per_catalog = optimality_lookup(rep.n, rep.k, rep.d)
    return rep
