from __future__ import annotations

import itertools

import pytest

from skeincalc.ring import LOOP, LaurentPoly, lp_monomial
from skeincalc.relators import (
    RelatorId,
    SurgeryParams,
    f_sum,
    f_tilde_sum,
    r12_closed,
    r13_closed,
    r23_closed,
    reflect,
    relator,
)
from skeincalc.skein import SkeinElement, elem_mul


def mono(*idx, c=1):
    return SkeinElement.monomial(*idx, c)


def a(e, c=1):
    return lp_monomial(c, e)


def test_single_strand_values():
    for n3 in range(6):
        assert r12_closed(1, 0, n3) == mono(1, 0, n3, c=a(-3, -1))
        assert r12_closed(0, 1, n3) == mono(0, 1, n3, c=a(-3, -1))
        assert r12_closed(0, 0, n3) == mono(0, 0, n3, c=LOOP)


def test_closed_form_examples():
    assert r12_closed(1, 1, 0) == mono(1, 1, 0, c=a(-4, -1)) + mono(0, 0, 1, c=a(-2, -1))
    assert r13_closed(0, 5, 0) == mono(0, 5, 0, c=LOOP)
    assert r23_closed(0, 1, 0) == mono(0, 1, 0, c=a(-3, -1))
    # brute expansion: the (0, -1, 0) term dies, the (0, 1, 0) term survives
    assert r13_closed(1, 0, 1) == mono(1, 0, 1, c=a(-4, -1)) + mono(0, 1, 0, c=a(-2, -1))


def test_closed_forms_are_pair_symmetric():
    for n in itertools.product(range(-4, 5), repeat=3):
        n1, n2, n3 = n
        assert r12_closed(n1, n2, n3) == r12_closed(n2, n1, n3).relabel((1, 0, 2))
        assert r13_closed(n1, n2, n3) == r13_closed(n3, n2, n1).relabel((2, 1, 0))
        # R23 is R12 with curves relabeled 1 -> 3 -> 2 -> 1
        assert r23_closed(n1, n2, n3) == r12_closed(n2, n3, n1).relabel((2, 0, 1))


def _curve(slot, l):
    idx = [0, 0, 0]
    idx[slot] = l
    return SkeinElement.monomial(*idx)


def _shift(n, slot, d):
    n = list(n)
    n[slot] += d
    return tuple(n)


@pytest.mark.parametrize(
    "closed,slot",
    [(r12_closed, 0), (r12_closed, 1), (r13_closed, 0), (r13_closed, 2), (r23_closed, 1), (r23_closed, 2)],
)
@pytest.mark.parametrize("direction", [-1, 1])
def test_multiplication_recurrences(closed, slot, direction):
    # R(n) = A^{dl} S_l R(n + dl) - A^{d(l+1)} S_{l-1} R(n + d(l+1)), d = +-1,
    # with S_l acting on the curve whose index is shifted
    for l in range(5):
        for n in itertools.product(range(-4, 5), range(-4, 5), range(0, 5)):
            n = (n[0], n[1], n[2]) if slot != 2 else (n[0], n[2], n[1])
            step, step1 = direction * l, direction * (l + 1)
            rhs = elem_mul(_curve(slot, l), closed(*_shift(n, slot, step))).scale(a(step))
            rhs = rhs - elem_mul(_curve(slot, l - 1), closed(*_shift(n, slot, step1))).scale(a(step1))
            assert closed(*n) == rhs, (n, l)


def test_relator_examples():
    k = (1, 1)
    assert relator(12, (1, 0, 0), k) == mono(1, 0, 0, c=a(-3, -1)) + mono(0, 1, 0, c=a(-3))
    for n3 in range(5):
        assert relator(12, (1, 1, n3), (2, 2)).is_zero()
        assert relator(12, (2, 1, n3), (4, 2)).is_zero()
    assert relator(12, (0, 0, -1), k).is_zero()
    for n in itertools.product(range(-3, 4), repeat=2):
        assert relator(12, (n[0], n[1], -1), (2, 3)).is_zero()


def test_reflection_identities():
    for k in [(1, 1), (1, 2), (2, 3), (3, 4)]:
        k1, k2 = k
        for n1, n2, n3 in itertools.product(range(-5, 6), repeat=3):
            r = relator(12, (n1, n2, n3), k)
            assert (r + relator(12, (k1 - n1, k2 - n2, n3), k)).is_zero()
            assert (r + relator(12, (n1, n2, -n3 - 2), k)).is_zero()


def test_reflect_rule_per_family():
    p = SurgeryParams(2, 3, 4)
    assert reflect(12, (1, 1, 1), p) == (1, 2, 1)
    assert reflect(13, (1, 1, 1), p) == (1, 1, 3)
    assert reflect(23, (1, 1, 1), p) == (1, 2, 3)


def test_relator_id_validation_and_json():
    p = SurgeryParams(2, 3, 4)
    rid = RelatorId(23, (1, 2, 3), p)
    assert RelatorId.from_json(rid.to_json()) == rid
    assert relator(rid) == relator(23, (1, 2, 3), (2, 3, 4))
    with pytest.raises(ValueError):
        RelatorId(14, (0, 0, 0), p)
    with pytest.raises(ValueError):
        RelatorId(13, (0, 0, 0), SurgeryParams(2, 2))
    with pytest.raises(ValueError):
        relator(23, (0, 0, 0), (2, 2))
    with pytest.raises(ValueError):
        SurgeryParams.of((1,))


def test_f_sum_examples():
    assert f_sum(0, 2, 1, 0) == mono(2, 1, 0, c=a(-5, -1))
    assert f_tilde_sum(-1, 2, 2, 3) == mono(1, 1, 2, c=a(-4, -1))
    assert f_sum(1, 2, 2, 0) == (mono(2, 2, 0) + mono(2, 2, 2)).scale(a(-6, -1)) + mono(1, 1, 1, c=a(-4, -1))
    with pytest.raises(ValueError):
        f_sum(-1, 0, 0, 0)
    with pytest.raises(ValueError):
        f_tilde_sum(-2, 0, 0, 0)


def test_run_decomposition():
    for u in range(5):
        for n1, n2, n3 in itertools.product(range(-4, 5), repeat=3):
            total = SkeinElement.zero()
            for j in range(u + 1):
                total = total + r12_closed(n1, n2, n3 + 2 * j)
            assert total == f_sum(u, n1, n2, n3) + f_sum(u + 1, n1 - 1, n2 - 1, n3 - 1)
            assert total == f_tilde_sum(u, n1, n2, n3) + f_tilde_sum(u - 1, n1 - 1, n2 - 1, n3 + 1)
