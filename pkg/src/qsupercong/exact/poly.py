"""Univariate polynomials in q with exact rational coefficients.

The heavy lifting is delegated to a kernel module chosen once per process:
FLINT's ``fmpq_poly`` when python-flint is importable, otherwise a pure-Python
dense implementation.  Set ``QSC_POLY_BACKEND=python`` to force the latter.
"""

from __future__ import annotations

import functools
import os
from fractions import Fraction
from numbers import Rational
from typing import Iterable

from . import _python_backend


def _select_backend():
    wanted = os.environ.get("QSC_POLY_BACKEND", "").strip().lower()
    if wanted == "python":
        return _python_backend
    try:
        from . import _flint_backend
    except ImportError:
        if wanted == "flint":
            raise
        return _python_backend
    return _flint_backend


_B = _select_backend()
BACKEND = _B.NAME


@functools.total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial; compares below every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("-inf-degree")

    def __repr__(self):
        return "-oo"


MINUS_INFINITY = _MinusInfinity()


class Poly:
    """Immutable polynomial in q over Q, canonical dense form."""

    __slots__ = ("_raw",)

    def __init__(self, coeffs: Iterable = ()):
        self._raw = _B.from_coeffs(list(coeffs))

    @classmethod
    def _wrap(cls, raw) -> "Poly":
        obj = cls.__new__(cls)
        obj._raw = raw
        return obj

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls([1])

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent; use RatFunc for Laurent terms")
        return cls([0] * k + [c])

    @classmethod
    def q(cls) -> "Poly":
        return cls([0, 1])

    # -- inspection -------------------------------------------------------

    def coefficients(self) -> list[Fraction]:
        return _B.coeffs(self._raw)

    @property
    def degree(self):
        if _B.is_zero(self._raw):
            return MINUS_INFINITY
        return _B.degree(self._raw)

    def is_zero(self) -> bool:
        return _B.is_zero(self._raw)

    def is_constant(self) -> bool:
        return _B.is_zero(self._raw) or _B.degree(self._raw) == 0

    def leading_coefficient(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        return _B.leading(self._raw)

    def monic(self) -> "Poly":
        return Poly._wrap(_B.monic(self._raw))

    def __call__(self, x) -> Fraction:
        return _B.evaluate(self._raw, x)

    def __bool__(self):
        return not _B.is_zero(self._raw)

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = Poly.constant(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return _B.equal(self._raw, other._raw)

    def __hash__(self):
        return hash(_B.key(self._raw))

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coefficients()):
            if not c:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms) if terms else "0"

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Rational)):
            return Poly.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Poly._wrap(_B.add(self._raw, other._raw))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Poly._wrap(_B.sub(self._raw, other._raw))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Poly._wrap(_B.sub(other._raw, self._raw))

    def __neg__(self):
        return Poly._wrap(_B.neg(self._raw))

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return Poly._wrap(_B.scale(self._raw, other))
        if not isinstance(other, Poly):
            return NotImplemented
        return Poly._wrap(_B.mul(self._raw, other._raw))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        return Poly._wrap(_B.power(self._raw, e))

    def shift(self, k: int) -> "Poly":
        """Multiply by q**k (k >= 0)."""
        return Poly._wrap(_B.shift(self._raw, k))

    def divrem(self, other: "Poly") -> tuple["Poly", "Poly"]:
        return poly_divrem(self, other)

    def __floordiv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return poly_divrem(self, other)[0]

    def __mod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return poly_divrem(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        """True when self | other exactly."""
        return poly_divrem(other, self)[1].is_zero()

    def __reduce__(self):
        return (Poly, (self.coefficients(),))


def poly_divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Euclidean division: a = quotient*b + remainder, deg remainder < deg b."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    quot, rem = _B.divrem(a._raw, b._raw)
    return Poly._wrap(quot), Poly._wrap(rem)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor.  gcd(0, 0) is undefined and raises."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return Poly._wrap(_B.monic(_B.gcd(a._raw, b._raw)))
