"""Reduced rational functions num/den in q.

Canonical form: gcd(num, den) = 1 and den is monic, so equality is structural.
Laurent expressions are ordinary RatFuncs whose denominator is a power of q.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .poly import Poly, poly_gcd


class PoleError(ZeroDivisionError):
    """Evaluation point is a root of the (reduced) denominator."""

    def __init__(self, point, denominator):
        self.point = point
        self.denominator = denominator
        super().__init__(f"pole at q = {point}: denominator {denominator} vanishes there")


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = Poly.one() if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Poly.zero(), Poly.one()
            return
        g = poly_gcd(num, den)
        if not g.is_constant():
            num, den = num // g, den // g
        lc = den.leading_coefficient()
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        self.num, self.den = num, den

    @classmethod
    def _trusted(cls, num: Poly, den: Poly) -> "RatFunc":
        # caller guarantees canonical form
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls._trusted(p, Poly.one())

    @classmethod
    def q_power(cls, e: int) -> "RatFunc":
        """q**e for any integer e."""
        if e >= 0:
            return cls._trusted(Poly.monomial(e), Poly.one())
        return cls._trusted(Poly.one(), Poly.monomial(-e))

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls._trusted(Poly.zero(), Poly.one())

    @classmethod
    def one(cls) -> "RatFunc":
        return cls._trusted(Poly.one(), Poly.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den == 1

    def to_poly(self) -> Poly:
        if not self.is_poly():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def __eq__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"RatFunc({self})"

    def __str__(self):
        if self.is_poly():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return _add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._trusted(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return _add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return _add(other, -self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return _mul(self, other)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero rational function")
        lc = self.num.leading_coefficient()
        return RatFunc._trusted(self.den * (1 / lc), self.num * (1 / lc))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return _mul(self, other.inverse())

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return _mul(other, self.inverse())

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        # powers of coprime polys stay coprime; den stays monic
        return RatFunc._trusted(self.num ** e, self.den ** e)

    def __call__(self, x) -> Fraction:
        return ratfunc_eval(self, x)

    def __reduce__(self):
        return (RatFunc._trusted, (self.num, self.den))


def _as_poly(x) -> Poly:
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Rational)):
        return Poly.constant(x)
    raise TypeError(f"cannot interpret {x!r} as a polynomial")


def _coerce(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc.from_poly(x)
    if isinstance(x, (int, Rational)):
        return RatFunc.from_poly(Poly.constant(x))
    return None


def _add(a: RatFunc, b: RatFunc) -> RatFunc:
    if a.is_zero():
        return b
    if b.is_zero():
        return a
    if a.den == b.den:
        num = a.num + b.num
        if num.is_zero():
            return RatFunc.zero()
        g = poly_gcd(num, a.den)
        if g.is_constant():
            return RatFunc._trusted(num, a.den)
        return RatFunc._trusted(num // g, a.den // g)
    g = poly_gcd(a.den, b.den)
    if g.is_constant():
        num = a.num * b.den + b.num * a.den
        return RatFunc._trusted(num, a.den * b.den)
    bd, ad = b.den // g, a.den // g
    num = a.num * bd + b.num * ad
    if num.is_zero():
        return RatFunc.zero()
    # any common factor of num and a.den*bd divides g
    h = poly_gcd(num, g)
    den = a.den * bd
    if not h.is_constant():
        num, den = num // h, den // h
    return RatFunc._trusted(num, den)


def _mul(a: RatFunc, b: RatFunc) -> RatFunc:
    if a.is_zero() or b.is_zero():
        return RatFunc.zero()
    an, ad, bn, bd = a.num, a.den, b.num, b.den
    g1 = poly_gcd(an, bd)
    if not g1.is_constant():
        an, bd = an // g1, bd // g1
    g2 = poly_gcd(bn, ad)
    if not g2.is_constant():
        bn, ad = bn // g2, ad // g2
    num, den = an * bn, ad * bd
    lc = den.leading_coefficient()
    if lc != 1:
        num, den = num * (1 / lc), den * (1 / lc)
    return RatFunc._trusted(num, den)


def ratfunc_eval(f: RatFunc, x) -> Fraction:
    """Exact value of f at a rational point."""
    x = Fraction(x)
    dval = f.den(x)
    if dval == 0:
        raise PoleError(x, f.den)
    return f.num(x) / dval
