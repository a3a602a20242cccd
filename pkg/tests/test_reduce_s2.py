from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skeincalc.eta import eta_elem
from skeincalc.reduce_s2 import InvalidParams, generators, in_box, reduce_s2
from skeincalc.relators import relator
from skeincalc.skein import Monomial, SkeinElement

from conftest import elements, laurent

K_GRID = [(2, 2, 2), (2, 3, 4), (3, 3, 3), (4, 2, 3)]


def test_generator_counts():
    assert len(generators((2, 2, 2))) == 27
    assert len(generators((2, 3, 4))) == 60
    assert len(generators((3, 3, 3))) == 64
    assert generators((3, 2, 5))[0] == Monomial(0, 0, 0)
    assert generators((2, 3, 4)) == sorted(generators((2, 3, 4)))


def test_invalid_params():
    for k in [(1, 2, 2), (2, 2, 0), (2, 2)]:
        with pytest.raises(InvalidParams):
            reduce_s2(SkeinElement.empty_link(), k)


def test_empty_link():
    rep, cert = reduce_s2(SkeinElement.empty_link(), (2, 2, 2))
    assert rep.elem == SkeinElement.empty_link() and len(cert) == 0


def test_pure_s3_power():
    e = SkeinElement.monomial(0, 0, 3)
    rep, cert = reduce_s2(e, (2, 2, 2))
    assert all(in_box(m, (2, 2, 2)) for m in rep.elem)
    assert cert.verify(e, rep.elem)
    assert cert.families() == {23}
    assert eta_elem(e, (2, 2, 2)) == eta_elem(rep.elem, (2, 2, 2))


@pytest.mark.parametrize("k", K_GRID[:2])
def test_relators_map_to_eta_zero_representatives(k):
    for fam in (12, 13, 23):
        for n in itertools.product(range(-3, 4), repeat=3):
            e = relator(fam, n, k)
            rep, cert = reduce_s2(e, k)
            assert cert.verify(e, rep.elem)
            assert eta_elem(rep.elem, k).is_zero()


@settings(max_examples=40, deadline=None)
@given(elements(max_terms=5, deg=12), elements(max_terms=3, deg=12), laurent(max_terms=2), st.sampled_from(K_GRID))
def test_box_support_certificate_linearity(e, f, alpha, k):
    re, ce = reduce_s2(e, k)
    rf, _ = reduce_s2(f, k)
    assert all(in_box(m, k) for m in re.elem)
    assert ce.verify(e, re.elem)
    assert eta_elem(e, k) == eta_elem(re.elem, k)
    combo, _ = reduce_s2(e.scale(alpha) + f, k)
    assert combo.elem == re.elem.scale(alpha) + rf.elem


def test_deterministic():
    rng = random.Random(7)
    e = SkeinElement({(rng.randint(0, 9), rng.randint(0, 9), rng.randint(0, 9)): 1 for _ in range(8)})
    assert reduce_s2(e, (2, 3, 4)) == reduce_s2(e, (2, 3, 4))
