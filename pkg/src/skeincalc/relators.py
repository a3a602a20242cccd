"""Handle-sliding relators and the summation families built from them.

Closed forms take arbitrary integer indices; every monomial goes through
``make_monomial`` so negative Chebyshev indices are handled by the sign
convention.  A relator is the difference of a closed form and its reflection
through the surgery coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .ring import LaurentPoly, lp_monomial
from .skein import Monomial, SkeinElement, make_monomial

__all__ = [
    "SurgeryParams",
    "RelatorId",
    "FAMILIES",
    "r12_closed",
    "r13_closed",
    "r23_closed",
    "closed_form",
    "relator",
    "reflect",
    "f_sum",
    "f_tilde_sum",
]

FAMILIES = (12, 13, 23)


@dataclass(frozen=True)
class SurgeryParams:
    """Surgery coefficients k1, k2 (and k3 for the closed manifold)."""

    k1: int
    k2: int
    k3: int | None = None

    @classmethod
    def of(cls, ks) -> SurgeryParams:
        if isinstance(ks, SurgeryParams):
            return ks
        ks = tuple(ks)
        if len(ks) == 2:
            return cls(ks[0], ks[1])
        if len(ks) == 3:
            return cls(*ks)
        raise ValueError(f"need two or three surgery coefficients, got {len(ks)}")

    def as_tuple(self) -> tuple[int, ...]:
        return (self.k1, self.k2) if self.k3 is None else (self.k1, self.k2, self.k3)

    def is_d2_valid(self) -> bool:
        return min(self.k1, self.k2) >= 1

    def is_s2_valid(self) -> bool:
        return self.k3 is not None and min(self.k1, self.k2, self.k3) >= 2


@dataclass(frozen=True)
class RelatorId:
    family: int
    n: tuple[int, int, int]
    params: SurgeryParams

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown relator family {self.family}")
        if self.family != 12 and self.params.k3 is None:
            raise ValueError(f"family {self.family} needs k3")

    def to_json(self) -> dict:
        return {"family": self.family, "n": list(self.n), "k": list(self.params.as_tuple())}

    @classmethod
    def from_json(cls, obj) -> RelatorId:
        n = obj["n"]
        if len(n) != 3:
            raise ValueError("relator index needs three integers")
        return cls(int(obj["family"]), tuple(int(x) for x in n), SurgeryParams.of(obj["k"]))

    def __str__(self) -> str:
        n1, n2, n3 = self.n
        return f"R{self.family}^({n1},{n2},{n3}) k={self.params.as_tuple()}"


def _combine(terms) -> SkeinElement:
    # terms: (coefficient, (i1, i2, i3)); coefficients are -A^e style units
    out: dict[Monomial, LaurentPoly] = {}
    for coeff, idx in terms:
        sign, mono = make_monomial(*idx)
        if not sign:
            continue
        c = out.get(mono)
        c = (coeff if sign > 0 else -coeff) if c is None else c + (coeff if sign > 0 else -coeff)
        if c:
            out[mono] = c
        else:
            out.pop(mono, None)
    return SkeinElement._raw(out)


def _neg_a(e: int) -> LaurentPoly:
    return lp_monomial(-1, e)


@lru_cache(maxsize=1 << 16)
def r12_closed(n1: int, n2: int, n3: int) -> SkeinElement:
    e = -n1 - n2
    return _combine(
        [
            (_neg_a(e - 2), (n1, n2, n3)),
            (_neg_a(e + 2), (n1 - 2, n2 - 2, n3)),
            (_neg_a(e), (n1 - 1, n2 - 1, n3 + 1)),
            (_neg_a(e), (n1 - 1, n2 - 1, n3 - 1)),
        ]
    )


@lru_cache(maxsize=1 << 16)
def r13_closed(n1: int, n2: int, n3: int) -> SkeinElement:
    e = -n1 - n3
    return _combine(
        [
            (_neg_a(e - 2), (n1, n2, n3)),
            (_neg_a(e + 2), (n1 - 2, n2, n3 - 2)),
            (_neg_a(e), (n1 - 1, n2 + 1, n3 - 1)),
            (_neg_a(e), (n1 - 1, n2 - 1, n3 - 1)),
        ]
    )


@lru_cache(maxsize=1 << 16)
def r23_closed(n1: int, n2: int, n3: int) -> SkeinElement:
    e = -n2 - n3
    return _combine(
        [
            (_neg_a(e - 2), (n1, n2, n3)),
            (_neg_a(e + 2), (n1, n2 - 2, n3 - 2)),
            (_neg_a(e), (n1 + 1, n2 - 1, n3 - 1)),
            (_neg_a(e), (n1 - 1, n2 - 1, n3 - 1)),
        ]
    )


_CLOSED = {12: r12_closed, 13: r13_closed, 23: r23_closed}


def closed_form(family: int, n1: int, n2: int, n3: int) -> SkeinElement:
    return _CLOSED[family](n1, n2, n3)


def reflect(family: int, n: tuple[int, int, int], params: SurgeryParams) -> tuple[int, int, int]:
    """Index of the slid copy: family 12 reflects (n1, n2) through (k1, k2),
    13 reflects (n1, n3) through (k1, k3), 23 reflects (n2, n3) through (k2, k3)."""
    n1, n2, n3 = n
    k1, k2, k3 = params.k1, params.k2, params.k3
    if family == 12:
        return (k1 - n1, k2 - n2, n3)
    if family == 13:
        return (k1 - n1, n2, k3 - n3)
    if family == 23:
        return (n1, k2 - n2, k3 - n3)
    raise ValueError(f"unknown relator family {family}")


@lru_cache(maxsize=1 << 16)
def _relator(family: int, n: tuple[int, int, int], params: SurgeryParams) -> SkeinElement:
    closed = _CLOSED[family]
    return closed(*n) - closed(*reflect(family, n, params))


def relator(rid: RelatorId | int, n=None, k=None) -> SkeinElement:
    """``relator(RelatorId)`` or ``relator(family, (n1, n2, n3), (k1, k2[, k3]))``."""
    if isinstance(rid, RelatorId):
        return _relator(rid.family, tuple(rid.n), rid.params)
    params = SurgeryParams.of(k)
    if rid != 12 and params.k3 is None:
        raise ValueError(f"family {rid} needs k3")
    return _relator(rid, tuple(n), params)


def f_sum(u: int, n1: int, n2: int, n3: int) -> SkeinElement:
    """The F family: two arithmetic runs in s3 with step 2; empty runs vanish."""
    if u < 0:
        raise ValueError("F needs u >= 0")
    terms = [(_neg_a(-n1 - n2 - 2), (n1, n2, n3 + 2 * j)) for j in range(u + 1)]
    terms += [(_neg_a(-n1 - n2), (n1 - 1, n2 - 1, n3 + 1 + 2 * j)) for j in range(u)]
    return _combine(terms)


def f_tilde_sum(u: int, n1: int, n2: int, n3: int) -> SkeinElement:
    """The F-tilde family; the second run has two more terms than in F."""
    if u < -1:
        raise ValueError("F-tilde needs u >= -1")
    terms = [(_neg_a(-n1 - n2 - 2), (n1, n2, n3 + 2 * j)) for j in range(u + 1)]
    terms += [(_neg_a(-n1 - n2), (n1 - 1, n2 - 1, n3 - 1 + 2 * j)) for j in range(u + 2)]
    return _combine(terms)
