"""Reduction of S^2(k1, k2, k3) skein elements into the box {l_i <= k_i}.

Stage one is the D^2 normal form with family-12 relators, which leaves
n1 <= k1 and n2 <= k2.  Stage two lowers s3: the out-of-box monomial with
the largest n3 (ties broken by (n1, n2) largest) is cancelled by its own
family-23 relator, or by its family-13 relator when it is a spill monomial
with n1 = k1 + 1.  Every out-of-box monomial created in stage two has a
strictly smaller n3 than the pivot, and spills always have n2 <= k2 - 1, so a
single pass of each stage reaches the box.

The representative is not canonical; the module need not be free.
"""

from __future__ import annotations

from dataclasses import dataclass

from .relators import RelatorId, SurgeryParams
from .reduce_d2 import (
    Certificate,
    InvalidParams,
    NonTermination,
    Rewriter,
    _check_support,
    rewrite_d2,
)
from .skein import Monomial, SkeinElement

__all__ = ["BoxRepresentative", "reduce_s2", "generators", "in_box", "InvalidParams"]


@dataclass(frozen=True)
class BoxRepresentative:
    elem: SkeinElement
    box: tuple[int, int, int]

    def __post_init__(self):
        for m in self.elem:
            if not in_box(m, self.box):
                raise ValueError(f"monomial {tuple(m)} outside the box {self.box}")


def _params(k) -> SurgeryParams:
    k = SurgeryParams.of(k)
    if k.k3 is None:
        raise InvalidParams("S^2 needs three surgery coefficients")
    if min(k.k1, k.k2, k.k3) < 2:
        raise InvalidParams(f"S^2 reduction needs every k_i >= 2, got {k.as_tuple()}")
    return k


def in_box(m, box) -> bool:
    return all(0 <= x <= b for x, b in zip(m, box))


def generators(k) -> list[Monomial]:
    k = _params(k)
    return [
        Monomial(a, b, c)
        for a in range(k.k1 + 1)
        for b in range(k.k2 + 1)
        for c in range(k.k3 + 1)
    ]


def reduce_s2(e: SkeinElement, k) -> tuple[BoxRepresentative, Certificate]:
    k = _params(k)
    _check_support(e)
    k1, k2, k3 = k.k1, k.k2, k.k3
    rw = Rewriter(e)
    rewrite_d2(rw, k)
    for m in rw.terms:
        if m.l1 > k1 or m.l2 > k2:
            raise NonTermination(f"D^2 stage left {tuple(m)} outside n1 <= k1, n2 <= k2")

    def out_of_box(m: Monomial) -> bool:
        return m.l3 > k3 or m.l1 > k1

    def pick(m: Monomial) -> RelatorId:
        if m.l1 > k1:
            if m.l1 != k1 + 1 or m.l2 > k2 - 1:
                raise NonTermination(f"unexpected spill monomial {tuple(m)}")
            return RelatorId(13, tuple(m), k)
        if m.l2 > k2:
            raise NonTermination(f"monomial {tuple(m)} left the n2 <= k2 column")
        return RelatorId(23, tuple(m), k)

    rw.drain(out_of_box, lambda m: (m.l3, m.l1, m.l2), pick, "s3 stage")
    rep = BoxRepresentative(rw.element(), (k1, k2, k3))
    return rep, Certificate(tuple(rw.steps))
