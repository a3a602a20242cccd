"""Instance-wise verification of the relator identities.

Each identity is registered with its free parameters, a hypothesis check and
a builder returning the residual(s): the left-hand side minus right-hand
side, assembled literally from closed forms and relators.  An instance passes
when every residual is the zero element.  Nothing here is symbolic in the
parameters; a sweep simply evaluates every instance in a box.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .ring import LaurentPoly, lp_monomial
from .relators import f_sum, f_tilde_sum, r12_closed, r13_closed, r23_closed, relator
from .skein import SkeinElement

__all__ = [
    "OutOfRange",
    "Identity",
    "IDENTITIES",
    "ZeroWitness",
    "SweepReport",
    "check_identity",
    "sweep",
    "default_ranges",
]


class OutOfRange(ValueError):
    """Parameters violate the hypotheses of the identity."""


def _a(e: int, sign: int = 1) -> LaurentPoly:
    return lp_monomial(sign, e)


def _sign(i: int) -> int:
    return -1 if i % 2 else 1


class _Acc:
    """Mutable accumulator; SkeinElement itself is immutable."""

    def __init__(self):
        self.terms: dict = {}

    def add(self, e: SkeinElement, coeff: LaurentPoly | int = 1) -> None:
        if isinstance(coeff, int):
            coeff = LaurentPoly._coerce(coeff)
        for m, c in e.items():
            v = self.terms.get(m)
            v = c * coeff if v is None else v + c * coeff
            if v:
                self.terms[m] = v
            else:
                self.terms.pop(m, None)

    def element(self) -> SkeinElement:
        return SkeinElement._raw(dict(self.terms))


def _double_sum(acc, coeff, i_lo, i_hi, j_hi, term):
    """acc += coeff * sum_{i=i_lo}^{i_hi} sum_{j=0}^{j_hi(i)} (-1)^i term(i, j)."""
    for i in range(i_lo, i_hi + 1):
        c = coeff if i % 2 == 0 else -coeff
        for j in range(0, j_hi(i) + 1):
            acc.add(term(i, j), c)


# -- individual identities -------------------------------------------


def _formula0(k1, k2, n3):
    k = (k1, k2)
    acc = _Acc()
    acc.add(relator(12, (-1, k2 + 1, n3), k))
    acc.add(relator(12, (0, k2, n3 - 1), k), _a(2))
    acc.add(relator(12, (0, k2, n3 + 1), k), _a(2))
    acc.add(relator(12, (1, k2 - 1, n3), k), _a(4))
    return [acc.element()]


def _formula01(k1, k2, n1, n2, n3):
    k = (k1, k2)

    def R(a, b, c):
        return relator(12, (a, b, c), k)

    acc = _Acc()
    acc.add(R(-n1, k2 + n2, n3))
    acc.add(R(-n1 + k1, n2, n3), _a(2 * n1 + 2 * n2, -1))
    _double_sum(acc, _a(2 * n1 - 2), 0, n1 - 2, lambda i: i,
                lambda i, j: R(n1 - 2 - i, k2 + n2 - i, n3 - i + 2 * j))
    _double_sum(acc, _a(2 * n1), 0, n1 - 1, lambda i: i + 1,
                lambda i, j: R(n1 - 1 - i, k2 + n2 - 1 - i, n3 - 1 - i + 2 * j))
    _double_sum(acc, _a(2 * n1), 1, n1 - 2, lambda i: i - 1,
                lambda i, j: R(n1 - 1 - i, k2 + n2 - 1 - i, n3 + 1 - i + 2 * j))
    _double_sum(acc, _a(2 * n1 + 2), 0, n1 - 1, lambda i: i,
                lambda i, j: R(n1 - i, k2 + n2 - 2 - i, n3 - i + 2 * j))
    _double_sum(acc, _a(2 * n2 + 2, -1), 0, n1 - 2, lambda i: i,
                lambda i, j: R(n1 + k1 - 2 - i, n2 - i, n3 - i + 2 * j))
    _double_sum(acc, _a(2 * n2, -1), 0, n1 - 1, lambda i: i + 1,
                lambda i, j: R(n1 + k1 - 1 - i, n2 - 1 - i, n3 - 1 - i + 2 * j))
    _double_sum(acc, _a(2 * n2, -1), 1, n1 - 2, lambda i: i - 1,
                lambda i, j: R(n1 + k1 - 1 - i, n2 - 1 - i, n3 + 1 - i + 2 * j))
    _double_sum(acc, _a(2 * n2 - 2, -1), 0, n1 - 1, lambda i: i,
                lambda i, j: R(n1 + k1 - i, n2 - 2 - i, n3 - i + 2 * j))
    return [acc.element()]


def _formula02(k1, k2, n1, n2, n3):
    k = (k1, k2)

    def R(a, b, c):
        return relator(12, (a, b, c), k)

    acc = _Acc()
    acc.add(R(-n1, k2 + n2, n3))
    acc.add(R(-n1 + k1, n2, n3), _a(2 * n1 + 2 * n2, -1))
    _double_sum(acc, _a(2 * n1 + 2), 0, n2 - 2, lambda i: i,
                lambda i, j: R(n1 - i, k2 + n2 - 2 - i, n3 - i + 2 * j))
    _double_sum(acc, _a(2 * n1), 0, n2 - 1, lambda i: i + 1,
                lambda i, j: R(n1 - 1 - i, k2 + n2 - 1 - i, n3 - 1 - i + 2 * j))
    _double_sum(acc, _a(2 * n1), 1, n2 - 2, lambda i: i - 1,
                lambda i, j: R(n1 - 1 - i, k2 + n2 - 1 - i, n3 + 1 - i + 2 * j))
    _double_sum(acc, _a(2 * n1 - 2), 0, n2 - 1, lambda i: i,
                lambda i, j: R(n1 - 2 - i, k2 + n2 - i, n3 - i + 2 * j))
    _double_sum(acc, _a(2 * n2 - 2, -1), 0, n2 - 2, lambda i: i,
                lambda i, j: R(n1 + k1 - i, n2 - 2 - i, n3 - i + 2 * j))
    _double_sum(acc, _a(2 * n2, -1), 0, n2 - 1, lambda i: i + 1,
                lambda i, j: R(n1 + k1 - 1 - i, n2 - 1 - i, n3 - 1 - i + 2 * j))
    _double_sum(acc, _a(2 * n2, -1), 1, n2 - 2, lambda i: i - 1,
                lambda i, j: R(n1 + k1 - 1 - i, n2 - 1 - i, n3 + 1 - i + 2 * j))
    _double_sum(acc, _a(2 * n2 + 2, -1), 0, n2 - 1, lambda i: i,
                lambda i, j: R(n1 + k1 - 2 - i, n2 - i, n3 - i + 2 * j))
    return [acc.element()]


def _formula1a(k1, k2, k3, n1, n2, n3):
    k = (k1, k2, k3)
    acc = _Acc()
    acc.add(relator(23, (n1, n2, n3), k))
    c12 = _a(n1 - n3, -1)
    c13 = _a(n1 + n2 - k2, -1)
    for i in range(n1 + 1):
        s = _sign(i)
        acc.add(relator(12, (n1 - i, n2 - i, n3 + i), k), c12 * s)
        acc.add(relator(12, (n1 + 1 - i, n2 - 1 - i, n3 - 1 + i), k), c12.shift(2) * s)
        acc.add(relator(13, (n1 - i, n2 - k2 - 2 - i, -n3 + k3 - i), k), c13 * s)
        acc.add(relator(13, (n1 + 1 - i, n2 - k2 - 1 - i, -n3 + k3 - 1 - i), k), c13.shift(2) * s)
    return [acc.element()]


def _formula1b(k1, k2, k3, n1, n2, n3):
    k = (k1, k2, k3)
    acc = _Acc()
    acc.add(relator(23, (n1, n2, n3), k))
    c13 = _a(n1 - n2, -1)
    c12 = _a(n1 + n3 - k3, -1)
    for i in range(n1 + 1):
        s = _sign(i)
        acc.add(relator(13, (n1 - i, n2 + i, n3 - i), k), c13 * s)
        acc.add(relator(13, (n1 + 1 - i, n2 - 1 + i, n3 - 1 - i), k), c13.shift(2) * s)
        acc.add(relator(12, (n1 - i, -n2 + k2 - i, n3 - k3 - 2 - i), k), c12 * s)
        acc.add(relator(12, (n1 + 1 - i, -n2 + k2 - 1 - i, n3 - k3 - 1 - i), k), c12.shift(2) * s)
    return [acc.element()]


def _fplusf(n1, n2, n3):
    first = f_sum(n1 + 1, -1, n2, n3) + f_sum(n1, 0, n2 - 1, n3 + 1).scale(_a(2))
    second = f_tilde_sum(n1 - 1, -1, n2, n3) + f_tilde_sum(n1, 0, n2 - 1, n3 - 1).scale(_a(2))
    return [first, second]


def _fourplusf(k, n1, n2, n3):
    acc = _Acc()
    acc.add(f_tilde_sum(n1, k, n1 - n2 - 1, n3), _a(2 * n1))
    acc.add(f_tilde_sum(n1 - 1, k - 1, n1 - n2, n3 + 1), _a(2 * n1 + 2))
    acc.add(f_sum(n1 + 1, k - 1, n2 - n1, n3 - 1), _a(2 * n2 + 2))
    acc.add(f_sum(n1, k, n2 - n1 - 1, n3), _a(2 * n2))
    return [acc.element()]


def _r12_run(u, n1, n2, n3):
    acc = _Acc()
    for j in range(u + 1):
        acc.add(r12_closed(n1, n2, n3 + 2 * j))
    return acc.element()


def _rsumf(u, n1, n2, n3):
    total = _r12_run(u, n1, n2, n3)
    via_f = f_sum(u, n1, n2, n3) + f_sum(u + 1, n1 - 1, n2 - 1, n3 - 1)
    via_ft = f_tilde_sum(u, n1, n2, n3) + f_tilde_sum(u - 1, n1 - 1, n2 - 1, n3 + 1)
    return [total - via_f, total - via_ft]


def _r12sums(u0, u1, c, n1, n2, n3):
    down = _Acc()
    up = _Acc()
    for i in range(u0, u1 + 1):
        s = _sign(i)
        for j in range(i + c + 1):
            down.add(r12_closed(n1 - i, n2 - i, n3 - i + 2 * j), s)
            up.add(r12_closed(n1 + i, n2 + i, n3 - i + 2 * j), s)
    down.add(f_sum(u0 + c, n1 - u0, n2 - u0, n3 - u0), -_sign(u0))
    down.add(f_sum(u1 + c + 1, n1 - u1 - 1, n2 - u1 - 1, n3 - u1 - 1), -_sign(u1))
    up.add(f_tilde_sum(u0 + c - 1, n1 + u0 - 1, n2 + u0 - 1, n3 - u0 + 1), -_sign(u0))
    up.add(f_tilde_sum(u1 + c, n1 + u1, n2 + u1, n3 - u1), -_sign(u1))
    return [down.element(), up.element()]


def _telescope(acc, rhs):
    # rhs terms are -(-1)^u A^ex s^idx; subtracting them adds (-1)^u A^ex s^idx
    for sgn, ex, idx in rhs:
        acc.add(SkeinElement.monomial(*idx, _a(ex)), sgn)
    return acc.element()


def _antidiagonal_down(u0, u1, n1, n2):
    acc = _Acc()
    for i in range(u0, u1 + 1):
        acc.add(r12_closed(n1 - i, n2 - i, i), _sign(i))
    e = -n1 - n2
    return _telescope(acc, [
        (_sign(u0), e + 2 * u0 - 2, (n1 - u0, n2 - u0, u0)),
        (_sign(u0), e + 2 * u0, (n1 - u0 - 1, n2 - u0 - 1, u0 - 1)),
        (_sign(u1), e + 2 * u1, (n1 - u1 - 1, n2 - u1 - 1, u1 + 1)),
        (_sign(u1), e + 2 * u1 + 2, (n1 - u1 - 2, n2 - u1 - 2, u1)),
    ])


def _antidiagonal_up_sum(u0, u1, n1, n2):
    acc = _Acc()
    for i in range(u0, u1 + 1):
        acc.add(r12_closed(n1 + i, n2 + i, i), _sign(i))
    return acc


def _antidiagonal_up_printed(u0, u1, n1, n2):
    e = -n1 - n2
    return _telescope(_antidiagonal_up_sum(u0, u1, n1, n2), [
        (_sign(u0), e - 2 * u0 - 2, (n1 + u0, n2 + u0, u0)),
        (_sign(u0), e - 2 * u0, (n1 + u0 - 1, n2 + u0 - 1, u0 + 1)),
        (_sign(u1), e - 2 * u1 - 2, (n1 + u1, n2 + u1, u1)),
        (_sign(u1), e - 2 * u1, (n1 + u1 - 1, n2 + u1 - 1, u1 + 1)),
    ])


def _antidiagonal_up_telescoped(u0, u1, n1, n2):
    # Boundary terms obtained by telescoping the four-term closed form
    # directly: the lower end contributes the i = u0 - 1 members.
    e = -n1 - n2
    return _telescope(_antidiagonal_up_sum(u0, u1, n1, n2), [
        (_sign(u0), e - 2 * u0, (n1 + u0 - 1, n2 + u0 - 1, u0 - 1)),
        (_sign(u0), e - 2 * u0 + 2, (n1 + u0 - 2, n2 + u0 - 2, u0)),
        (_sign(u1), e - 2 * u1 - 2, (n1 + u1, n2 + u1, u1)),
        (_sign(u1), e - 2 * u1, (n1 + u1 - 1, n2 + u1 - 1, u1 + 1)),
    ])


def _l1_1(u0, u1, n1, n2):
    return [_antidiagonal_down(u0, u1, n1, n2), _antidiagonal_up_printed(u0, u1, n1, n2)]


def _l1_1_telescoped(u0, u1, n1, n2):
    return [_antidiagonal_down(u0, u1, n1, n2), _antidiagonal_up_telescoped(u0, u1, n1, n2)]


def _l1_2(n1, n2, n3):
    lhs = r23_closed(n1, n2, n3)
    via12 = _Acc()
    via13 = _Acc()
    c12 = _a(n1 - n3)
    c13 = _a(n1 - n2)
    for i in range(n1 + 1):
        s = _sign(i)
        via12.add(r12_closed(n1 - i, n2 - i, n3 + i), c12 * s)
        via12.add(r12_closed(n1 + 1 - i, n2 - 1 - i, n3 - 1 + i), c12.shift(2) * s)
        via13.add(r13_closed(n1 - i, n2 + i, n3 - i), c13 * s)
        via13.add(r13_closed(n1 + 1 - i, n2 - 1 + i, n3 - 1 - i), c13.shift(2) * s)
    return [lhs - via12.element(), lhs - via13.element()]


def _l1_3(k1, n1, n2, n3):
    acc = _Acc()
    for i in range(n1 + 1):
        s = _sign(i)
        acc.add(r12_closed(-n1 + k1 + i, n2 + i, n3 + i), _a(-n3) * s)
        acc.add(r12_closed(-n1 + k1 - 1 + i, n2 + 1 + i, n3 - 1 + i), _a(-n3 + 2) * s)
        acc.add(r13_closed(-n1 + k1 + i, n2 + i, n3 + i), _a(-n2, -1) * s)
        acc.add(r13_closed(-n1 + k1 - 1 + i, n2 - 1 + i, n3 + 1 + i), _a(-n2 + 2, -1) * s)
    return [acc.element()]


# -- registry ---------------------------------------------------------


@dataclass(frozen=True)
class Identity:
    name: str
    params: tuple[str, ...]
    build: Callable[..., list[SkeinElement]]
    requires: Callable[..., str | None]
    defaults: Mapping[str, tuple[int, int]] = field(default_factory=dict)
    description: str = ""


def _need(**conds):
    def check(**p):
        for label, pred in conds.items():
            if not pred(p):
                return label
        return None

    return check


_K_D2 = (1, 4)
_K_S2 = (2, 4)

IDENTITIES: dict[str, Identity] = {
    ident.name: ident
    for ident in [
        Identity(
            "formula0", ("k1", "k2", "n3"), _formula0,
            _need(**{"k1,k2 >= 1": lambda p: p["k1"] >= 1 and p["k2"] >= 1}),
            {"k1": _K_D2, "k2": _K_D2, "n3": (0, 4)},
            "four-term relation among R12 relators next to n1 = 0",
        ),
        Identity(
            "formula01", ("k1", "k2", "n1", "n2", "n3"), _formula01,
            _need(**{"n1 >= 1": lambda p: p["n1"] >= 1,
                     "k1,k2 >= 1": lambda p: p["k1"] >= 1 and p["k2"] >= 1}),
            {"k1": _K_D2, "k2": _K_D2, "n1": (1, 4), "n2": (0, 4), "n3": (0, 4)},
            "R12 with negative first index via relators further right (n1-indexed sums)",
        ),
        Identity(
            "formula02", ("k1", "k2", "n1", "n2", "n3"), _formula02,
            _need(**{"n2 >= 1": lambda p: p["n2"] >= 1,
                     "k1,k2 >= 1": lambda p: p["k1"] >= 1 and p["k2"] >= 1}),
            {"k1": _K_D2, "k2": _K_D2, "n1": (0, 4), "n2": (1, 4), "n3": (0, 4)},
            "as formula01 with the sums indexed by n2",
        ),
        Identity(
            "formula1a", ("k1", "k2", "k3", "n1", "n2", "n3"), _formula1a,
            _need(**{"n1 >= 0": lambda p: p["n1"] >= 0,
                     "k1,k2,k3 >= 2": lambda p: min(p["k1"], p["k2"], p["k3"]) >= 2}),
            {"k1": _K_S2, "k2": _K_S2, "k3": _K_S2, "n1": (0, 4), "n2": (-4, 4), "n3": (-4, 4)},
            "R23 relator through R12 and R13 relators",
        ),
        Identity(
            "formula1b", ("k1", "k2", "k3", "n1", "n2", "n3"), _formula1b,
            _need(**{"n1 >= 0": lambda p: p["n1"] >= 0,
                     "k1,k2,k3 >= 2": lambda p: min(p["k1"], p["k2"], p["k3"]) >= 2}),
            {"k1": _K_S2, "k2": _K_S2, "k3": _K_S2, "n1": (0, 4), "n2": (-4, 4), "n3": (-4, 4)},
            "R23 relator through R13 and R12 relators",
        ),
        Identity(
            "FplusF", ("n1", "n2", "n3"), _fplusf,
            _need(**{"n1 >= 0": lambda p: p["n1"] >= 0}),
            {"n1": (0, 4), "n2": (-4, 4), "n3": (-4, 4)},
            "two-term cancellations of F and F-tilde",
        ),
        Identity(
            "FourPlusF", ("k", "n1", "n2", "n3"), _fourplusf,
            _need(**{"n1 >= 0": lambda p: p["n1"] >= 0}),
            {"k": (-4, 4), "n1": (0, 4), "n2": (-4, 4), "n3": (-4, 4)},
            "four-term cancellation mixing F and F-tilde",
        ),
        Identity(
            "RsumF", ("u", "n1", "n2", "n3"), _rsumf,
            _need(**{"u >= 0": lambda p: p["u"] >= 0}),
            {"u": (0, 4), "n1": (-4, 4), "n2": (-4, 4), "n3": (-4, 4)},
            "a run of R12 closed forms split into two F (or F-tilde) blocks",
        ),
        Identity(
            "R12sums", ("u0", "u1", "c", "n1", "n2", "n3"), _r12sums,
            _need(**{"u1 >= u0": lambda p: p["u1"] >= p["u0"],
                     "u0 + c >= 0": lambda p: p["u0"] + p["c"] >= 0}),
            {"u0": (-1, 3), "u1": (-1, 4), "c": (-2, 3), "n1": (-4, 4), "n2": (-4, 4), "n3": (-4, 4)},
            "alternating double sums of R12 closed forms telescoped to F blocks",
        ),
        Identity(
            "L1_1", ("u0", "u1", "n1", "n2"), _l1_1,
            _need(**{"u1 >= u0": lambda p: p["u1"] >= p["u0"]}),
            {"u0": (-2, 3), "u1": (-2, 4), "n1": (-4, 4), "n2": (-4, 4)},
            "telescoping alternating sums of R12 closed forms along antidiagonals, "
            "both equations with boundary terms as stated",
        ),
        Identity(
            "L1_1_telescoped", ("u0", "u1", "n1", "n2"), _l1_1_telescoped,
            _need(**{"u1 >= u0": lambda p: p["u1"] >= p["u0"]}),
            {"u0": (-2, 3), "u1": (-2, 4), "n1": (-4, 4), "n2": (-4, 4)},
            "as L1_1, with the increasing-index equation's lower boundary terms "
            "recomputed by telescoping (not part of the stated list)",
        ),
        Identity(
            "L1_2", ("n1", "n2", "n3"), _l1_2,
            _need(**{"n1 >= 0": lambda p: p["n1"] >= 0}),
            {"n1": (0, 4), "n2": (-4, 4), "n3": (-4, 4)},
            "R23 closed form expanded through R12 and through R13 closed forms",
        ),
        Identity(
            "L1_3", ("k1", "n1", "n2", "n3"), _l1_3,
            _need(**{"n1 >= 0": lambda p: p["n1"] >= 0}),
            {"k1": (1, 4), "n1": (0, 4), "n2": (-4, 4), "n3": (-4, 4)},
            "reflected R12 and R13 alternating sums agree",
        ),
    ]
}


@dataclass(frozen=True)
class ZeroWitness:
    """Outcome of one instance: ``residuals`` is empty when it is zero."""

    name: str
    params: tuple[tuple[str, int], ...]
    residuals: tuple[tuple[int, SkeinElement], ...]

    @property
    def is_zero(self) -> bool:
        return not self.residuals

    def to_json(self) -> dict:
        return {
            "identity": self.name,
            "params": dict(self.params),
            "zero": self.is_zero,
            "residuals": [
                {"equation": idx, "residual": r.to_json()} for idx, r in self.residuals
            ],
        }


def check_identity(name: str, params: Mapping[str, int] | None = None, **kw) -> ZeroWitness:
    try:
        ident = IDENTITIES[name]
    except KeyError:
        raise KeyError(f"unknown identity {name!r}; known: {', '.join(IDENTITIES)}") from None
    p = dict(params or {}, **kw)
    missing = [x for x in ident.params if x not in p]
    extra = [x for x in p if x not in ident.params]
    if missing or extra:
        raise ValueError(f"{name} takes parameters {ident.params}; missing {missing}, unexpected {extra}")
    bad = ident.requires(**p)
    if bad:
        raise OutOfRange(f"{name}: hypothesis {bad} fails for {p}")
    residuals = ident.build(**{x: p[x] for x in ident.params})
    nonzero = tuple((i, r) for i, r in enumerate(residuals) if not r.is_zero())
    return ZeroWitness(name, tuple((x, p[x]) for x in ident.params), nonzero)


def default_ranges(name: str) -> dict[str, tuple[int, int]]:
    return dict(IDENTITIES[name].defaults)


@dataclass
class SweepReport:
    name: str
    ranges: dict[str, tuple[int, int]]
    checked: int = 0
    skipped: int = 0
    failures: list[ZeroWitness] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self, with_residuals: bool = False) -> dict:
        return {
            "identity": self.name,
            "ranges": {k: list(v) for k, v in self.ranges.items()},
            "checked": self.checked,
            "skipped": self.skipped,
            "failures": [
                f.to_json() if with_residuals else {"params": dict(f.params)} for f in self.failures
            ],
        }


def _instances(name: str, ranges: Mapping[str, tuple[int, int]]):
    ident = IDENTITIES[name]
    axes = [range(ranges[x][0], ranges[x][1] + 1) for x in ident.params]
    for values in itertools.product(*axes):
        yield dict(zip(ident.params, values))


def _check_chunk(name: str, chunk: Sequence[dict]):
    out = []
    for p in chunk:
        if IDENTITIES[name].requires(**p):
            out.append(None)
        else:
            out.append(check_identity(name, p))
    return out


def sweep(name: str, ranges: Mapping[str, tuple[int, int]] | None = None, jobs: int = 1) -> SweepReport:
    """Check every instance in the box; instances outside the hypotheses are
    skipped and counted.  Results are in lexicographic parameter order
    regardless of ``jobs``."""
    if name not in IDENTITIES:
        raise KeyError(f"unknown identity {name!r}")
    full = default_ranges(name)
    for key, val in (ranges or {}).items():
        if key not in full:
            raise ValueError(f"{name} has no parameter {key!r}")
        full[key] = tuple(val)
    report = SweepReport(name, full)
    instances = list(_instances(name, full))
    if jobs > 1 and len(instances) > 1:
        size = max(1, len(instances) // (jobs * 4))
        chunks = [instances[i:i + size] for i in range(0, len(instances), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = [r for part in pool.map(_check_chunk, [name] * len(chunks), chunks) for r in part]
    else:
        results = _check_chunk(name, instances)
    for w in results:
        if w is None:
            report.skipped += 1
            continue
        report.checked += 1
        if not w.is_zero:
            report.failures.append(w)
    return report
