import itertools

import pytest

from z2z2u.ring import ELEMENTS, ONE, U, W, ZERO, RingElement, eta, inverse, is_unit, lee_weight, parse_token


def test_u_squared_is_zero():
    assert U * U == ZERO
    assert W * W == ONE


@pytest.mark.parametrize("a,b,c", list(itertools.product(ELEMENTS, repeat=3)))
def test_commutative_ring_axioms(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a + a == ZERO


@pytest.mark.parametrize("a,b", list(itertools.product(ELEMENTS, repeat=2)))
def test_eta_is_a_homomorphism(a, b):
    assert eta(a + b) == eta(a) ^ eta(b)
    assert eta(a * b) == eta(a) & eta(b)


def test_lee_weights():
    assert [lee_weight(e) for e in (ZERO, ONE, U, W)] == [0, 1, 2, 1]


def test_units_and_inverses():
    assert [is_unit(e) for e in ELEMENTS] == [False, True, False, True]
    for e in (ONE, W):
        assert e * inverse(e) == ONE
    for e in (ZERO, U):
        with pytest.raises(ZeroDivisionError):
            inverse(e)


@pytest.mark.parametrize("tok,want", [("0", ZERO), ("1", ONE), ("u", U), ("U", U), ("w", W), ("1+u", W), ("u+1", W)])
def test_parse_token(tok, want):
    assert parse_token(tok) == want


@pytest.mark.parametrize("tok", ["2", "", "x", "1+1"])
def test_parse_token_rejects(tok):
    with pytest.raises(ValueError):
        parse_token(tok)


def test_str_tokens_roundtrip():
    for e in ELEMENTS:
        assert parse_token(str(e)) == e


def test_invalid_element():
    with pytest.raises(ValueError):
        RingElement(2, 0)
