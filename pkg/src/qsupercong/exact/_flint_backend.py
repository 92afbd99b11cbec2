"""FLINT-backed polynomial kernels (``flint.fmpq_poly``)."""

from fractions import Fraction

from flint import fmpq, fmpq_poly

NAME = "flint"

_ZERO = fmpq_poly([])
_ONE = fmpq_poly([1])


def _q(x):
    x = Fraction(x)
    return fmpq(x.numerator, x.denominator)


def _frac(c):
    return Fraction(int(c.p), int(c.q))


def from_coeffs(coeffs):
    return fmpq_poly([_q(x) for x in coeffs])


def coeffs(a):
    return [_frac(c) for c in a.coeffs()]


def degree(a):
    return a.degree()


def is_zero(a):
    return a.is_zero()


def add(a, b):
    return a + b


def neg(a):
    return -a


def sub(a, b):
    return a - b


def mul(a, b):
    return a * b


def scale(a, c):
    return a * _q(c)


def shift(a, k):
    return a.left_shift(k)


def power(a, e):
    return a ** e


def divrem(a, b):
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    return divmod(a, b)


def monic(a):
    if a.is_zero():
        return a
    return a / a.leading_coefficient()


def gcd(a, b):
    return a.gcd(b)


def evaluate(a, x):
    return _frac(a(_q(x)))


def leading(a):
    return _frac(a.leading_coefficient())


def equal(a, b):
    return a == b


def key(a):
    return tuple(str(c) for c in a.coeffs())
