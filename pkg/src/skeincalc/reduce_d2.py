"""Certified normal forms in the skein module of D^2(k1, k2).

Every family-12 relator has a single leading monomial (its own index) with
unit coefficient, so a relator indexed by a non-basis monomial can cancel
that monomial outright.  Rewriting runs in two phases:

* phase 1 removes monomials with n1 > k1, largest (n1, n2, n3) first; all
  replacement monomials have smaller n1;
* phase 2 removes the remaining non-basis monomials, largest (n2, n1, n3)
  first; replacement monomials have smaller n2 except the reflected one,
  which keeps n2 only when 2*n2 = k2 and then lies in the basis.

Because every pivot is a distinct non-basis monomial and its relator is
triangular with respect to these orders, the result is a projection onto the
span of the basis whose kernel is spanned by the pivot relators.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

from .ring import ZERO, LaurentPoly
from .relators import RelatorId, SurgeryParams, relator
from .skein import Monomial, SkeinElement, TermLimitExceeded, max_terms

__all__ = [
    "RegionTag",
    "Certificate",
    "NonTermination",
    "NegativeSupport",
    "InvalidParams",
    "region_of",
    "in_basis",
    "enumerate_basis",
    "reduce_d2",
]


class NonTermination(AssertionError):
    """A rewriting measure failed to decrease; indicates a transcription bug."""


class NegativeSupport(ValueError):
    """Input monomials must have nonnegative indices."""


class InvalidParams(ValueError):
    """Surgery coefficients outside the supported range."""


class RegionTag(enum.Enum):
    IN_BASIS = "InBasis"
    REGION1 = "Region1"
    REGION2 = "Region2"
    REGION3 = "Region3"


@dataclass(frozen=True)
class Certificate:
    """Steps (relator id, coefficient) with input - output = sum c * relator."""

    steps: tuple[tuple[RelatorId, LaurentPoly], ...] = ()

    def __len__(self) -> int:
        return len(self.steps)

    def combination(self) -> SkeinElement:
        acc: dict[Monomial, LaurentPoly] = {}
        for rid, c in self.steps:
            for m, v in relator(rid).items():
                w = acc.get(m, ZERO) + v * c
                if w:
                    acc[m] = w
                else:
                    acc.pop(m, None)
        return SkeinElement._raw(acc)

    def residual(self, source: SkeinElement, target: SkeinElement) -> SkeinElement:
        return source - target - self.combination()

    def verify(self, source: SkeinElement, target: SkeinElement) -> bool:
        return self.residual(source, target).is_zero()

    def families(self) -> set[int]:
        return {rid.family for rid, _ in self.steps}

    def to_json(self) -> dict:
        return {"steps": [{"relator": rid.to_json(), "coeff": c.to_json()} for rid, c in self.steps]}

    @classmethod
    def from_json(cls, obj) -> Certificate:
        if not isinstance(obj, Mapping) or "steps" not in obj or not isinstance(obj["steps"], list):
            raise ValueError('certificate JSON must be an object with a "steps" list')
        steps = []
        for s in obj["steps"]:
            if not isinstance(s, Mapping) or set(s) != {"relator", "coeff"}:
                raise ValueError('each certificate step needs exactly "relator" and "coeff"')
            steps.append((RelatorId.from_json(s["relator"]), LaurentPoly.from_json(s["coeff"])))
        return cls(tuple(steps))


# -- basis and regions -------------------------------------------------


def _check_d2(k: SurgeryParams) -> None:
    if k.k1 < 1 or k.k2 < 1:
        raise InvalidParams(f"D^2 reduction needs k1, k2 >= 1, got {k.as_tuple()[:2]}")


def _in_basis_ordered(n1: int, n2: int, k1: int, k2: int) -> bool:
    # halves compared exactly: n >= k/2  <=>  2n >= k
    if k1 <= 2 * n1 and n1 <= k1 and 2 * n2 <= k2:
        return True
    return 2 * n1 < k1 and 2 * n2 < k2


def in_basis(m: Iterable[int], k) -> bool:
    """Membership in the free basis; for k1 > k2 the roles of slots 1 and 2 swap."""
    k = SurgeryParams.of(k)
    n1, n2, _ = m
    if k.k1 > k.k2:
        return _in_basis_ordered(n2, n1, k.k2, k.k1)
    return _in_basis_ordered(n1, n2, k.k1, k.k2)


def _region_ordered(n1: int, n2: int, k1: int, k2: int) -> RegionTag:
    if n1 > k1:
        return RegionTag.REGION1
    if _in_basis_ordered(n1, n2, k1, k2):
        return RegionTag.IN_BASIS
    if 2 * n1 > k1:
        return RegionTag.REGION2
    return RegionTag.REGION3


def region_of(m: Iterable[int], k) -> RegionTag:
    """Region of a monomial.  With k1 > k2 the tag refers to the swapped
    coordinates, matching the relabeling used by ``reduce_d2``."""
    k = SurgeryParams.of(k)
    _check_d2(k)
    n1, n2, _ = m
    if k.k1 > k.k2:
        return _region_ordered(n2, n1, k.k2, k.k1)
    return _region_ordered(n1, n2, k.k1, k.k2)


def enumerate_basis(k, n3_max: int) -> list[Monomial]:
    k = SurgeryParams.of(k)
    _check_d2(k)
    out = [
        Monomial(n1, n2, n3)
        for n1 in range(k.k1 + 1)
        for n2 in range(k.k2 + 1)
        for n3 in range(n3_max + 1)
        if in_basis((n1, n2, n3), k)
    ]
    return sorted(out)


# -- rewriting engine --------------------------------------------------


class Rewriter:
    """Mutable working copy of an element plus the certificate steps taken.

    ``cancel`` removes one monomial using a relator whose coefficient at that
    monomial is a unit.  Shared by the D^2 and S^2 reductions.
    """

    def __init__(self, elem: SkeinElement):
        self.terms: dict[Monomial, LaurentPoly] = dict(elem.items())
        self.steps: list[tuple[RelatorId, LaurentPoly]] = []
        self.limit = max_terms()

    def cancel(self, mono: Monomial, rid: RelatorId) -> list[Monomial]:
        rel = relator(rid)
        lead = rel.coefficient(mono)
        if not lead.is_unit():
            raise NonTermination(f"{rid} has non-unit coefficient {lead} at pivot {mono}")
        factor = self.terms[mono] * lead.inverse()
        touched = []
        for m, v in rel.items():
            w = self.terms.get(m, ZERO) - v * factor
            if w:
                self.terms[m] = w
            else:
                self.terms.pop(m, None)
            touched.append(m)
        if mono in self.terms:
            raise NonTermination(f"pivot {mono} survived cancellation by {rid}")
        if len(self.terms) > self.limit:
            raise TermLimitExceeded(f"reduction exceeded {self.limit} terms")
        self.steps.append((rid, factor))
        return touched

    def drain(
        self,
        eligible: Callable[[Monomial], bool],
        key: Callable[[Monomial], tuple],
        pick: Callable[[Monomial], RelatorId],
        label: str,
    ) -> None:
        """Cancel eligible monomials, always the one with the largest key.

        The pivot keys must strictly decrease; that is the termination
        measure, and any violation raises ``NonTermination``.
        """
        heap = [tuple(-x for x in key(m)) + (m,) for m in self.terms if eligible(m)]
        heapq.heapify(heap)
        last = None
        while heap:
            entry = heapq.heappop(heap)
            m = entry[-1]
            if m not in self.terms or not eligible(m):
                continue
            k = key(m)
            if last is not None and not k < last:
                raise NonTermination(f"{label}: pivot key {k} does not decrease below {last}")
            last = k
            for t in self.cancel(m, pick(m)):
                if t in self.terms and eligible(t):
                    heapq.heappush(heap, tuple(-x for x in key(t)) + (t,))

    def element(self) -> SkeinElement:
        return SkeinElement._raw(dict(self.terms))


def _check_support(e: SkeinElement) -> None:
    for m in e:
        if min(m) < 0:
            raise NegativeSupport(f"monomial {tuple(m)} has a negative index")


def _rewrite_d2(rw: Rewriter, k: SurgeryParams) -> None:
    """Phase 1 and phase 2 on a rewriter, for k1 <= k2."""
    k1, k2 = k.k1, k.k2

    def rid(m: Monomial) -> RelatorId:
        return RelatorId(12, tuple(m), k)

    rw.drain(lambda m: m.l1 > k1, lambda m: (m.l1, m.l2, m.l3), rid, "phase 1")
    rw.drain(
        lambda m: not _in_basis_ordered(m.l1, m.l2, k1, k2),
        lambda m: (m.l2, m.l1, m.l3),
        rid,
        "phase 2",
    )


_SWAP = (1, 0, 2)


def rewrite_d2(rw: Rewriter, k: SurgeryParams) -> None:
    """Apply the D^2 reduction in place, relabeling slots when k1 > k2.

    Family-12 closed forms are symmetric in (n1, n2), so a relator for the
    swapped problem is the swapped relator of the original one.
    """
    if k.k1 <= k.k2:
        _rewrite_d2(rw, k)
        return
    swapped = Rewriter(SkeinElement._raw(rw.terms).relabel(_SWAP))
    swapped.limit = rw.limit
    _rewrite_d2(swapped, SurgeryParams(k.k2, k.k1, k.k3))
    rw.terms = dict(swapped.element().relabel(_SWAP).items())
    for rid, c in swapped.steps:
        n1, n2, n3 = rid.n
        rw.steps.append((RelatorId(12, (n2, n1, n3), k), c))


def reduce_d2(e: SkeinElement, k) -> tuple[SkeinElement, Certificate]:
    """Normal form on the free basis together with its certificate."""
    k = SurgeryParams.of(k)
    _check_d2(k)
    _check_support(e)
    rw = Rewriter(e)
    rewrite_d2(rw, SurgeryParams(k.k1, k.k2))
    normal = rw.element()
    for m in normal:
        if not in_basis(m, k):
            raise NonTermination(f"monomial {m} left outside the basis")
    return normal, Certificate(tuple(rw.steps))
