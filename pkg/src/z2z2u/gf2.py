"""GF(2) row reduction on int bitsets."""

from __future__ import annotations

from typing import Iterable


def _pivots(rows: Iterable[int]) -> dict[int, int]:
    piv: dict[int, int] = {}
    for v in rows:
        while v:
            top = v.bit_length() - 1
            b = piv.get(top)
            if b is None:
                piv[top] = v
                break
            v ^= b
    return piv


def echelon(rows: Iterable[int]) -> list[int]:
    """Reduced row echelon basis, sorted descending; unique for a given row space."""
    piv = _pivots(rows)
    keys = sorted(piv)
    for i, k in enumerate(keys):
        v = piv[k]
        for k2 in reversed(keys[:i]):
            if (v >> k2) & 1:
                v ^= piv[k2]
        piv[k] = v
    return sorted(piv.values(), reverse=True)


def rank(rows: Iterable[int]) -> int:
    return len(_pivots(rows))


def in_span(v: int, basis: list[int]) -> bool:
    """Membership test against a basis produced by :func:`echelon`."""
    for b in basis:
        if (v >> (b.bit_length() - 1)) & 1:
            v ^= b
    return v == 0


def same_span(a: Iterable[int], b: Iterable[int]) -> bool:
    return echelon(a) == echelon(b)


def enumerate_span(basis: list[int]) -> list[int]:
    words = [0]
    for b in basis:
        words += [w ^ b for w in words]
    return words
