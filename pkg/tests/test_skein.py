from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given, settings

from skeincalc.ring import LOOP, ONE, ZERO, LaurentPoly
from skeincalc.skein import (
    EMPTY,
    Monomial,
    SkeinElement,
    TermLimitExceeded,
    cheb_linearize,
    chebyshev_poly,
    elem_add,
    elem_mul,
    elem_scale,
    make_monomial,
    normalize_index,
    poly_oracle,
)

from conftest import elements


def mono(*idx, c=1):
    return SkeinElement.monomial(*idx, c)


def test_normalize_index_examples():
    assert normalize_index(-1) == (0, 0)
    assert normalize_index(-2) == (-1, 0)
    assert normalize_index(-5) == (-1, 3)
    assert normalize_index(4) == (1, 4)


def test_normalize_matches_backward_recurrence():
    # chebyshev_poly runs the recurrence backwards for negative n
    for n in range(-12, 12):
        sign, m = normalize_index(n)
        expect = [sign * c for c in chebyshev_poly(m)] if sign else [0]
        got = chebyshev_poly(n)
        assert got + [0] * (len(expect) - len(got)) == expect + [0] * (len(got) - len(expect))


def test_make_monomial_examples():
    assert make_monomial(1, 0, 5) == (1, Monomial(1, 0, 5))
    assert make_monomial(-1, 3, 3) == (0, EMPTY)
    assert make_monomial(-2, -2, 0) == (1, EMPTY)


def test_make_monomial_against_polynomial_oracle():
    for idx in itertools.product(range(-8, 9), repeat=3):
        assert poly_oracle(SkeinElement.monomial(*idx)) == poly_oracle({idx: ONE})


def test_cheb_linearize_examples():
    assert cheb_linearize(1, 1) == [2, 0]
    assert cheb_linearize(5, 0) == [5]
    assert cheb_linearize(2, 1) == [3, 1]
    assert len(cheb_linearize(3, 7)) == 4


def test_module_operations():
    e = mono(1, 2, 3, c=LOOP)
    assert elem_add(e, -e).is_zero()
    assert elem_scale(e, 0).is_zero()
    assert elem_scale(SkeinElement.empty_link(), LOOP) == SkeinElement({EMPTY: LOOP})


def test_elem_mul_examples():
    n3 = 4
    assert elem_mul(mono(1, 0, 0), mono(0, 0, n3)) == mono(1, 0, n3)
    assert elem_mul(mono(1, 0, 0), mono(1, 0, 0)) == mono(2, 0, 0) + mono(0, 0, 0)
    assert elem_mul(mono(2, 1, 0), mono(1, 0, 0)) == mono(3, 1, 0) + mono(1, 1, 0)


def test_poly_oracle_examples():
    assert poly_oracle(mono(1, 0, 0)) == {(1, 0, 0): ONE}
    assert poly_oracle(mono(2, 0, 0)) == {(2, 0, 0): ONE, (0, 0, 0): -ONE}
    assert poly_oracle(SkeinElement.empty_link()) == {(0, 0, 0): ONE}


@settings(max_examples=150, deadline=None)
@given(elements(deg=6), elements(deg=6), elements(max_terms=2, deg=6))
def test_mul_commutative_associative(e, f, g):
    assert poly_oracle(elem_mul(e, f)) == poly_oracle(elem_mul(f, e))
    assert elem_mul(e, f) == elem_mul(f, e)
    assert elem_mul(elem_mul(e, f), g) == elem_mul(e, elem_mul(f, g))


@settings(max_examples=150, deadline=None)
@given(elements(), elements())
def test_oracle_is_multiplicative(e, f):
    from skeincalc.skein import poly_mul

    assert poly_oracle(elem_mul(e, f)) == poly_mul(poly_oracle(e), poly_oracle(f))


@settings(max_examples=100, deadline=None)
@given(elements())
def test_empty_link_is_unit(e):
    one = SkeinElement.empty_link()
    assert elem_mul(one, e) == e == elem_mul(e, one)


@settings(max_examples=100, deadline=None)
@given(elements())
def test_json_round_trip(e):
    text = json.dumps(e.to_json())
    assert SkeinElement.from_json(json.loads(text)) == e


def test_json_is_sorted_and_strict():
    e = mono(2, 0, 0) + mono(0, 1, 0, c=LaurentPoly({-1: 3}))
    assert [t["monomial"] for t in e.to_json()["terms"]] == [[0, 1, 0], [2, 0, 0]]
    bad_inputs = [
        {"terms": [{"monomial": [0, 0, 0], "coeff": {}}]},
        {"terms": [{"monomial": [0, 0, 0], "coeff": {"0": 0}}]},
        {"terms": [{"monomial": [-1, 0, 0], "coeff": {"0": 1}}]},
        {"terms": [{"monomial": [0, 0], "coeff": {"0": 1}}]},
        {"terms": [{"monomial": [0, 0, 0], "coeff": {"0": 1}}] * 2},
        {"terms": [{"monomial": [True, 0, 0], "coeff": {"0": 1}}]},
        {"elements": []},
    ]
    for bad in bad_inputs:
        with pytest.raises(ValueError):
            SkeinElement.from_json(bad)


def test_negative_stored_monomial_rejected():
    with pytest.raises(ValueError):
        SkeinElement({(-1, 0, 0): ONE})


def test_term_limit(monkeypatch):
    monkeypatch.setenv("SKEINCALC_MAX_TERMS", "10")
    with pytest.raises(TermLimitExceeded):
        elem_mul(mono(6, 6, 0), mono(6, 6, 0))
    monkeypatch.setenv("SKEINCALC_MAX_TERMS", "lots")
    with pytest.raises(ValueError):
        elem_mul(mono(1, 0, 0), mono(1, 0, 0))


def test_relabel_and_zero():
    assert mono(1, 2, 3).relabel((1, 0, 2)) == mono(2, 1, 3)
    assert SkeinElement.zero().is_zero()
    assert mono(0, 0, 0).coefficient((5, 5, 5)) == ZERO
