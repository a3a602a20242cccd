"""Exact coefficient arithmetic.

``LaurentPoly`` is the ring Z[A, A^-1] with arbitrary-precision integer
coefficients.  ``Eisenstein`` is Z[zeta] for a primitive sixth root of unity
zeta = e^{i pi/3}, stored on the basis {1, zeta} with zeta^2 = zeta - 1.
``cyc_eval`` is the ring map sending A to zeta.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "Eisenstein",
    "lp_monomial",
    "lp_arith",
    "cyc_eval",
    "ZERO",
    "ONE",
    "A",
    "LOOP",
    "EXPONENT_BOUND",
]

# Exponents are kept within a signed 63-bit window; leaving it is an error
# rather than a silent wrap.
EXPONENT_BOUND = 2**62

_EXP_KEY = re.compile(r"-?(0|[1-9][0-9]*)")


def _check_exponent(k: int) -> int:
    if not -EXPONENT_BOUND <= k <= EXPONENT_BOUND:
        raise OverflowError(f"exponent {k} outside supported range")
    return k


class LaurentPoly:
    """Immutable Laurent polynomial in A with integer coefficients.

    The zero polynomial is the empty map; no stored coefficient is zero, so
    equality of values is equality of the term maps.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for k, c in items:
            if not isinstance(k, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be integers")
            k = _check_exponent(int(k))
            c = clean.get(k, 0) + int(c)
            if c:
                clean[k] = c
            else:
                clean.pop(k, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> LaurentPoly:
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, k: int) -> int:
        return self._terms.get(k, 0)

    def min_exponent(self) -> int:
        return min(self._terms)

    def max_exponent(self) -> int:
        return max(self._terms)

    def is_unit(self) -> bool:
        """True for +-A^k, the units of Z[A^+-1]."""
        return len(self._terms) == 1 and next(iter(self._terms.values())) in (1, -1)

    def inverse(self) -> LaurentPoly:
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of Z[A^+-1]")
        (k, c), = self._terms.items()
        return LaurentPoly._raw({_check_exponent(-k): c})

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _coerce(other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly._raw({0: other} if other else {})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            c = out.get(k, 0) + c
            if c:
                out[k] = c
            else:
                del out[k]
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return ZERO
        if len(other._terms) == 1 or len(self._terms) == 1:
            # monomial times polynomial: shift and scale, no collisions possible
            (k0, c0), = (other if len(other._terms) == 1 else self)._terms.items()
            rest = self if len(other._terms) == 1 else other
            _check_exponent(rest.min_exponent() + k0)
            _check_exponent(rest.max_exponent() + k0)
            return LaurentPoly._raw({k + k0: c * c0 for k, c in rest._terms.items()})
        _check_exponent(self.min_exponent() + other.min_exponent())
        _check_exponent(self.max_exponent() + other.max_exponent())
        out: dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                c = out.get(k, 0) + c1 * c2
                if c:
                    out[k] = c
                else:
                    del out[k]
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> LaurentPoly:
        if e < 0:
            return self.inverse() ** (-e)
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by A^k."""
        if not k:
            return self
        return LaurentPoly._raw({_check_exponent(e + k): c for e, c in self._terms.items()})

    # -- comparison / hashing -----------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly._coerce(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- serialization ------------------------------------------------
    def to_json(self) -> dict[str, int]:
        return {str(k): self._terms[k] for k in sorted(self._terms)}

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> LaurentPoly:
        if not isinstance(obj, Mapping):
            raise ValueError("LaurentPoly JSON must be an object")
        terms = {}
        for key, c in obj.items():
            if not isinstance(key, str) or not _EXP_KEY.fullmatch(key):
                raise ValueError(f"exponent key {key!r} is not a decimal integer")
            k = int(key)
            if isinstance(c, bool) or not isinstance(c, int):
                raise ValueError(f"coefficient for A^{key} must be an integer")
            if k in terms:
                raise ValueError(f"duplicate exponent {k}")
            terms[k] = c
        return cls(terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_json()})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms, reverse=True):
            c = self._terms[k]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "A" if k == 1 else f"A^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
A = LaurentPoly._raw({1: 1})
# value of a trivial component: -A^2 - A^-2
LOOP = LaurentPoly._raw({2: -1, -2: -1})


def lp_monomial(c: int, k: int) -> LaurentPoly:
    """The polynomial c*A^k."""
    if not c:
        return ZERO
    return LaurentPoly._raw({_check_exponent(k): c})


def lp_arith(p: LaurentPoly, q: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown op {op!r}")


@dataclass(frozen=True)
class Eisenstein:
    """a + b*zeta with zeta = e^{i pi/3}, so zeta^2 = zeta - 1."""

    a: int = 0
    b: int = 0

    def __add__(self, other: Eisenstein) -> Eisenstein:
        return Eisenstein(self.a + other.a, self.b + other.b)

    def __sub__(self, other: Eisenstein) -> Eisenstein:
        return Eisenstein(self.a - other.a, self.b - other.b)

    def __neg__(self) -> Eisenstein:
        return Eisenstein(-self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, int):
            return Eisenstein(self.a * other, self.b * other)
        # (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2,  z^2 = z - 1
        a, b, c, d = self.a, self.b, other.a, other.b
        return Eisenstein(a * c - b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Eisenstein:
        if e < 0:
            return self.inverse() ** (-e)
        result, base = Eisenstein(1, 0), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def norm(self) -> int:
        # N(a + b z) = a^2 + ab + b^2 for z a primitive sixth root
        return self.a * self.a + self.a * self.b + self.b * self.b

    def conjugate(self) -> Eisenstein:
        # conj(z) = 1 - z
        return Eisenstein(self.a + self.b, -self.b)

    def inverse(self) -> Eisenstein:
        n = self.norm()
        if n != 1:
            raise ZeroDivisionError(f"{self} is not a unit of Z[zeta_6]")
        return self.conjugate()

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def to_complex(self) -> complex:
        """Floating-point value, for display only."""
        import cmath

        return self.a + self.b * cmath.exp(1j * cmath.pi / 3)

    def to_json(self) -> dict[str, int]:
        return {"a": self.a, "b": self.b}

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> Eisenstein:
        if set(obj) != {"a", "b"}:
            raise ValueError("Eisenstein JSON must have exactly the keys 'a' and 'b'")
        a, b = obj["a"], obj["b"]
        if any(isinstance(x, bool) or not isinstance(x, int) for x in (a, b)):
            raise ValueError("Eisenstein components must be integers")
        return cls(a, b)

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*zeta" if self.a else f"{self.b}*zeta"


ZETA = Eisenstein(0, 1)
# zeta^k for k mod 6
_ZETA_POWERS = [Eisenstein(1, 0)]
for _ in range(5):
    _ZETA_POWERS.append(_ZETA_POWERS[-1] * ZETA)


def cyc_eval(p: LaurentPoly) -> Eisenstein:
    """Evaluate at A = e^{i pi/3}."""
    a = b = 0
    for k, c in p.items():
        z = _ZETA_POWERS[k % 6]
        a += c * z.a
        b += c * z.b
    return Eisenstein(a, b)
