"""The evaluation homomorphism at A = e^{i pi/3} (r = 3, colors 0 and 1).

Coefficients are built as division-free Laurent polynomials and only then
evaluated in Z[zeta], so every identity relating them to their quotient forms
can be checked exactly before evaluation.

Note on the value of Delta_1: the quotient formula gives
Delta_1 = -(A^2 + A^-2), which evaluates to +1 at this root.  With +1 every
summand of the empty-link sum is 1 and the total is 16; a value of -1 would
make the signed sum cancel.  The formula value is what is implemented.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .ring import Eisenstein, LaurentPoly, cyc_eval, lp_monomial
from .relators import SurgeryParams
from .skein import SkeinElement

__all__ = [
    "COLORS",
    "delta",
    "mu",
    "mu_pow",
    "f_coeff",
    "eta_monomial",
    "eta_elem",
    "DELTA1_NOTE",
]

COLORS = (0, 1)

DELTA1_NOTE = (
    "Delta_1 = -(A^2 + A^-2) evaluates to +1 at A = e^{i pi/3}; a tabulated value "
    "of -1 is inconsistent with the empty-link total 16 and is not used."
)


def _check_nonneg(**vals) -> None:
    for name, v in vals.items():
        if v < 0:
            raise ValueError(f"{name} must be nonnegative, got {v}")


@lru_cache(maxsize=None)
def delta(n: int) -> LaurentPoly:
    """(-1)^n (A^{2(n+1)} - A^{-2(n+1)}) / (A^2 - A^-2), as a geometric sum."""
    _check_nonneg(n=n)
    sign = -1 if n % 2 else 1
    return LaurentPoly({2 * (n - 2 * j): sign for j in range(n + 1)})


def mu(n: int) -> LaurentPoly:
    """Twist coefficient (-1)^n A^{n^2 + 2n}."""
    _check_nonneg(n=n)
    return lp_monomial(-1 if n % 2 else 1, n * n + 2 * n)


def mu_pow(n: int, e: int) -> LaurentPoly:
    return mu(n) ** e


@lru_cache(maxsize=None)
def f_coeff(n: int, a: int) -> LaurentPoly:
    """(-1)^a (A^{2(n+1)(a+1)} - A^{-2(n+1)(a+1)}) / (A^{2(n+1)} - A^{-2(n+1)})."""
    _check_nonneg(n=n, a=a)
    sign = -1 if a % 2 else 1
    step = 2 * (n + 1)
    return LaurentPoly({step * (a - 2 * j): sign for j in range(a + 1)})


@lru_cache(maxsize=None)
def _f_value(n: int, a: int) -> Eisenstein:
    return cyc_eval(f_coeff(n, a))


@lru_cache(maxsize=None)
def _summands(k: tuple[int, int, int]) -> tuple[tuple[tuple[int, int, int], Eisenstein], ...]:
    # decoration-free part of each summand, keyed by the colors (i1, i2, i3)
    out = []
    for i0, i1, i2, i3 in itertools.product(COLORS, repeat=4):
        p = delta(i0) * delta(i0) * delta(i1) * delta(i2) * delta(i3)
        p = p * mu_pow(i1, -k[0]) * mu_pow(i2, -k[1]) * mu_pow(i3, -k[2])
        p = p * f_coeff(i0, i1) * f_coeff(i0, i2) * f_coeff(i0, i3)
        out.append(((i1, i2, i3), cyc_eval(p)))
    return tuple(out)


def eta_monomial(l, k) -> Eisenstein:
    """Value on s1^l1 s2^l2 s3^l3: each decorated curve a_j contributes
    f_{i_j}^{l_j} for the strand it encircles."""
    k = SurgeryParams.of(k)
    if k.k3 is None:
        raise ValueError("eta needs three surgery coefficients")
    l1, l2, l3 = l
    _check_nonneg(l1=l1, l2=l2, l3=l3)
    total = Eisenstein(0, 0)
    for (i1, i2, i3), base in _summands(k.as_tuple()):
        total = total + base * _f_value(i1, l1) * _f_value(i2, l2) * _f_value(i3, l3)
    return total


def eta_elem(e: SkeinElement, k) -> Eisenstein:
    total = Eisenstein(0, 0)
    for m, c in e.items():
        total = total + cyc_eval(c) * eta_monomial(m, k)
    return total
