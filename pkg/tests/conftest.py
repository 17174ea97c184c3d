"""Shared hypothesis strategies and brute-force oracles."""

from __future__ import annotations

import itertools

import numpy as np
from hypothesis import strategies as st

from z2z2u.ring import ELEMENTS
from z2z2u.vector import MixedVector


@st.composite
def vectors(draw, r: int | None = None, s: int | None = None, max_r: int = 6, max_s: int = 5):
    r = draw(st.integers(0, max_r)) if r is None else r
    s = draw(st.integers(0, max_s)) if s is None else s
    return MixedVector(r, s, draw(st.integers(0, (1 << r) - 1)), draw(st.integers(0, (1 << s) - 1)),
                       draw(st.integers(0, (1 << s) - 1)))


@st.composite
def shapes(draw, max_r: int = 6, max_s: int = 5):
    r = draw(st.integers(0, max_r))
    s = draw(st.integers(0, max_s))
    if r + s == 0:
        r = 1
    return r, s


@st.composite
def generator_sets(draw, max_r: int = 6, max_s: int = 5, max_rows: int = 4):
    r, s = draw(shapes(max_r, max_s))
    rows = draw(st.lists(vectors(r, s), min_size=1, max_size=max_rows))
    return r, s, rows


# ring multiplication table on codes p + 2q (0, 1, u, 1+u)
RING_CODES = {e: e.p + 2 * e.q for e in ELEMENTS}
MUL_TABLE = np.zeros((4, 4), dtype=np.uint8)
for _a in ELEMENTS:
    for _b in ELEMENTS:
        # written out from u^2 = 0: (p + uq)(p' + uq') = pp' + u(pq' + qp')
        MUL_TABLE[RING_CODES[_a], RING_CODES[_b]] = (_a.p & _b.p) + 2 * ((_a.p & _b.q) ^ (_a.q & _b.p))


def ambient(r: int, s: int) -> tuple[np.ndarray, np.ndarray]:
    """Every vector of Z2^r x R^s as (binary array, ring-code array)."""
    bins = np.array(list(itertools.product((0, 1), repeat=r)), dtype=np.uint8).reshape(1 << r, r)
    rings = np.array(list(itertools.product(range(4), repeat=s)), dtype=np.uint8).reshape(4 ** s, s)
    nb, nr = len(bins), len(rings)
    return np.repeat(bins, nr, axis=0), np.tile(rings, (nb, 1))


def as_arrays(v: MixedVector) -> tuple[np.ndarray, np.ndarray]:
    b = np.array(v.bits, dtype=np.uint8)
    ring = np.array([RING_CODES[e] for e in v.ring], dtype=np.uint8)
    return b, ring


def brute_force_dual(r: int, s: int, generators) -> set[tuple]:
    """Dual by scanning the ambient space: <v, w> = u * sum(a a') + sum(b b') in R."""
    A, B = ambient(r, s)
    keep = np.ones(len(A), dtype=bool)
    for g in generators:
        gb, gr = as_arrays(g)
        binpar = (A @ gb.astype(np.int64)) % 2 if r else np.zeros(len(A), dtype=np.int64)
        acc = np.zeros(len(A), dtype=np.uint8)
        for j in range(s):
            acc ^= MUL_TABLE[B[:, j], gr[j]]
        acc ^= (binpar.astype(np.uint8) * 2)
        keep &= acc == 0
    return {tuple(a) + tuple(b) for a, b in zip(A[keep].tolist(), B[keep].tolist())}


def key(v: MixedVector) -> tuple:
    return tuple(v.bits) + tuple(RING_CODES[e] for e in v.ring)


def lee_weight_oracle(v: MixedVector) -> int:
    return sum(v.bits) + sum({0: 0, 1: 1, 2: 2, 3: 1}[RING_CODES[e]] for e in v.ring)


# ---------------------------------------------------------------------------
# acceptance verdict lines, printed at the end of the run

ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
