"""The free skein module of the genus-two handlebody.

A basis element is a triple ``(l1, l2, l3)`` standing for the product
S_l1(a1) S_l2(a2) S_l3(a3) of Chebyshev-decorated boundary curves.  Negative
Chebyshev indices follow S_n = -S_{-n-2} (so S_-1 = 0) and are normalized
away when a monomial is built; they are never stored.
"""

from __future__ import annotations

import itertools
import os
from typing import Iterable, Iterator, Mapping, NamedTuple

from .ring import ONE, ZERO, LaurentPoly

__all__ = [
    "Monomial",
    "SignedMonomial",
    "SkeinElement",
    "TermLimitExceeded",
    "normalize_index",
    "make_monomial",
    "cheb_linearize",
    "elem_add",
    "elem_scale",
    "elem_mul",
    "chebyshev_poly",
    "poly_oracle",
    "poly_mul",
    "max_terms",
    "EMPTY",
]


class TermLimitExceeded(RuntimeError):
    """An intermediate element grew past SKEINCALC_MAX_TERMS."""


def max_terms() -> int:
    raw = os.environ.get("SKEINCALC_MAX_TERMS", "")
    try:
        return int(raw) if raw else 10**6
    except ValueError:
        raise ValueError(f"SKEINCALC_MAX_TERMS={raw!r} is not an integer") from None


class Monomial(NamedTuple):
    l1: int
    l2: int
    l3: int

    def __str__(self) -> str:
        return f"({self.l1},{self.l2},{self.l3})"


EMPTY = Monomial(0, 0, 0)


class SignedMonomial(NamedTuple):
    sign: int
    mono: Monomial


def normalize_index(n: int) -> tuple[int, int]:
    """Return ``(sign, m)`` with m >= 0 and S_n = sign * S_m.

    ``sign`` is 0 exactly when S_n vanishes (n = -1); the index is then 0.
    """
    if n >= 0:
        return 1, n
    if n == -1:
        return 0, 0
    # one reflection lands at -n-2 >= 0
    return -1, -n - 2


def make_monomial(i1: int, i2: int, i3: int) -> SignedMonomial:
    s1, m1 = normalize_index(i1)
    s2, m2 = normalize_index(i2)
    s3, m3 = normalize_index(i3)
    sign = s1 * s2 * s3
    if not sign:
        return SignedMonomial(0, EMPTY)
    return SignedMonomial(sign, Monomial(m1, m2, m3))


def cheb_linearize(a: int, b: int) -> list[int]:
    """Indices c with S_a S_b = sum_c S_c (all multiplicities one)."""
    if a < 0 or b < 0:
        raise ValueError("cheb_linearize needs nonnegative degrees")
    return list(range(a + b, abs(a - b) - 1, -2))


class SkeinElement:
    """Finite Z[A^+-1]-combination of basis monomials.

    Values are immutable; arithmetic returns new elements.  Zero
    coefficients are never stored.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Monomial, LaurentPoly] = {}
        for mono, coeff in items:
            mono = Monomial(*mono)
            if min(mono) < 0:
                raise ValueError(f"negative index in stored monomial {tuple(mono)}")
            coeff = LaurentPoly._coerce(coeff)
            if coeff is NotImplemented:
                raise TypeError("coefficients must be LaurentPoly or int")
            c = out.get(mono, ZERO) + coeff
            if c:
                out[mono] = c
            else:
                out.pop(mono, None)
        self._terms = out

    @classmethod
    def _raw(cls, terms: dict[Monomial, LaurentPoly]) -> SkeinElement:
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def monomial(cls, i1: int, i2: int, i3: int, coeff: LaurentPoly | int = ONE) -> SkeinElement:
        """``coeff * s1^i1 s2^i2 s3^i3`` with the sign convention applied."""
        sign, mono = make_monomial(i1, i2, i3)
        coeff = LaurentPoly._coerce(coeff)
        if not sign or not coeff:
            return cls._raw({})
        return cls._raw({mono: coeff if sign > 0 else -coeff})

    @classmethod
    def empty_link(cls) -> SkeinElement:
        return cls._raw({EMPTY: ONE})

    @classmethod
    def zero(cls) -> SkeinElement:
        return cls._raw({})

    # -- inspection ---------------------------------------------------
    def items(self):
        return self._terms.items()

    def monomials(self) -> list[Monomial]:
        return sorted(self._terms)

    def coefficient(self, mono) -> LaurentPoly:
        return self._terms.get(Monomial(*mono), ZERO)

    def __contains__(self, mono) -> bool:
        return tuple(mono) in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(sorted(self._terms))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def support(self) -> set[Monomial]:
        return set(self._terms)

    # -- module structure ---------------------------------------------
    def __add__(self, other: SkeinElement) -> SkeinElement:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for mono, c in other._terms.items():
            c = out.get(mono, ZERO) + c
            if c:
                out[mono] = c
            else:
                del out[mono]
        return SkeinElement._raw(out)

    def __neg__(self) -> SkeinElement:
        return SkeinElement._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: SkeinElement) -> SkeinElement:
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self + (-other)

    def scale(self, p: LaurentPoly | int) -> SkeinElement:
        p = LaurentPoly._coerce(p)
        if not p:
            return SkeinElement._raw({})
        if p == ONE:
            return self
        out = {}
        for mono, c in self._terms.items():
            c = c * p
            if c:
                out[mono] = c
        return SkeinElement._raw(out)

    def __rmul__(self, p):
        if isinstance(p, (LaurentPoly, int)):
            return self.scale(p)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, SkeinElement):
            return elem_mul(self, other)
        if isinstance(other, (LaurentPoly, int)):
            return self.scale(other)
        return NotImplemented

    def add_term(self, mono, coeff: LaurentPoly) -> SkeinElement:
        return self + SkeinElement._raw({Monomial(*mono): coeff} if coeff else {})

    def relabel(self, perm: tuple[int, int, int]) -> SkeinElement:
        """Permute curve slots: new slot i holds old slot perm[i]."""
        return SkeinElement._raw(
            {Monomial(m[perm[0]], m[perm[1]], m[perm[2]]): c for m, c in self._terms.items()}
        )

    # -- comparison ---------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, SkeinElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- serialization ------------------------------------------------
    def to_json(self) -> dict:
        return {
            "terms": [
                {"monomial": list(m), "coeff": self._terms[m].to_json()}
                for m in sorted(self._terms)
            ]
        }

    @classmethod
    def from_json(cls, obj) -> SkeinElement:
        if not isinstance(obj, Mapping) or set(obj) != {"terms"}:
            raise ValueError('SkeinElement JSON must be an object with the single key "terms"')
        terms = obj["terms"]
        if not isinstance(terms, list):
            raise ValueError('"terms" must be a list')
        out: dict[Monomial, LaurentPoly] = {}
        for t in terms:
            if not isinstance(t, Mapping) or set(t) != {"monomial", "coeff"}:
                raise ValueError('each term needs exactly "monomial" and "coeff"')
            m = t["monomial"]
            if (
                not isinstance(m, list)
                or len(m) != 3
                or any(isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in m)
            ):
                raise ValueError(f"bad monomial {m!r}: need three nonnegative integers")
            mono = Monomial(*m)
            if mono in out:
                raise ValueError(f"duplicate monomial {m!r}")
            c = LaurentPoly.from_json(t["coeff"])
            if not c:
                raise ValueError(f"zero coefficient for monomial {m!r}")
            out[mono] = c
        return cls._raw(out)

    def __repr__(self) -> str:
        return f"SkeinElement({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({self._terms[m]})*s{tuple(m)}" for m in sorted(self._terms))


def elem_add(e: SkeinElement, f: SkeinElement) -> SkeinElement:
    return e + f


def elem_scale(e: SkeinElement, p: LaurentPoly | int) -> SkeinElement:
    return e.scale(p)


def _mono_product(m: Monomial, n: Monomial) -> Iterator[Monomial]:
    for triple in itertools.product(
        cheb_linearize(m[0], n[0]), cheb_linearize(m[1], n[1]), cheb_linearize(m[2], n[2])
    ):
        yield Monomial(*triple)


def elem_mul(e: SkeinElement, f: SkeinElement) -> SkeinElement:
    """Product in the skein algebra; the three curves multiply independently."""
    out: dict[Monomial, LaurentPoly] = {}
    limit = max_terms()
    for m, c in e._terms.items():
        for n, d in f._terms.items():
            cd = c * d
            for mono in _mono_product(m, n):
                v = out.get(mono, ZERO) + cd
                if v:
                    out[mono] = v
                else:
                    del out[mono]
            if len(out) > limit:
                raise TermLimitExceeded(f"product exceeded {limit} terms")
    return SkeinElement._raw(out)


# -- polynomial oracle -------------------------------------------------
#
# Independent of cheb_linearize: each basis monomial becomes an honest
# polynomial in three commuting variables, built from the three-term
# recurrence.  Polynomials are dicts (ex, ey, ez) -> LaurentPoly.

_CHEB_CACHE: list[list[int]] = [[1], [0, 1]]


def chebyshev_poly(n: int) -> list[int]:
    """Integer coefficient list (constant term first) of S_n(x).

    Negative n uses S_n = -S_{-n-2}, applied through the recurrence run
    backwards (S_{q-1} = x S_q - S_{q+1}), not through normalize_index.
    """
    if n >= 0:
        while len(_CHEB_CACHE) <= n:
            q = len(_CHEB_CACHE) - 1
            xs = [0] + _CHEB_CACHE[q]
            prev = _CHEB_CACHE[q - 1] + [0] * (len(xs) - len(_CHEB_CACHE[q - 1]))
            _CHEB_CACHE.append([a - b for a, b in zip(xs, prev)])
        return list(_CHEB_CACHE[n])
    hi, lo = chebyshev_poly(1), chebyshev_poly(0)  # S_1, S_0
    for _ in range(-n):
        width = max(len(hi), len(lo) + 1)
        xs = ([0] + lo) + [0] * (width - len(lo) - 1)
        hi_p = hi + [0] * (width - len(hi))
        hi, lo = lo, [a - b for a, b in zip(xs, hi_p)]
    while len(lo) > 1 and lo[-1] == 0:
        lo.pop()
    return lo


Poly3 = dict  # (ex, ey, ez) -> LaurentPoly


def poly_mul(p: Poly3, q: Poly3) -> Poly3:
    out: Poly3 = {}
    for ep, cp in p.items():
        for eq, cq in q.items():
            key = (ep[0] + eq[0], ep[1] + eq[1], ep[2] + eq[2])
            v = out.get(key, ZERO) + cp * cq
            if v:
                out[key] = v
            else:
                del out[key]
    return out


def _monomial_poly(l1: int, l2: int, l3: int) -> Poly3:
    out: Poly3 = {}
    for i, a in enumerate(chebyshev_poly(l1)):
        if not a:
            continue
        for j, b in enumerate(chebyshev_poly(l2)):
            if not b:
                continue
            for k, c in enumerate(chebyshev_poly(l3)):
                if c:
                    out[(i, j, k)] = LaurentPoly._raw({0: a * b * c})
    return out


def poly_oracle(e: SkeinElement | Mapping) -> Poly3:
    """Expand an element as a polynomial in x, y, z over Z[A^+-1].

    Also accepts a raw mapping ``(i1, i2, i3) -> coeff`` whose indices may be
    negative; those expand through the extended Chebyshev polynomials
    directly, which makes this usable as an oracle for ``make_monomial``.
    """
    items = e.items()
    out: Poly3 = {}
    for mono, coeff in items:
        coeff = LaurentPoly._coerce(coeff)
        for key, v in _monomial_poly(*mono).items():
            v = out.get(key, ZERO) + v * coeff
            if v:
                out[key] = v
            else:
                del out[key]
    return out
