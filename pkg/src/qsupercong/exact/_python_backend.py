"""Pure-Python dense polynomial kernels over the rationals.

A polynomial is a tuple of Fractions, index i holding the coefficient of q**i,
with no trailing zeros (the zero polynomial is the empty tuple).  This path is
slow but has no dependencies; it is also used by the test-suite as an
independent reference for the FLINT-backed path.
"""

from fractions import Fraction

NAME = "python"


def _normalize(c):
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def from_coeffs(coeffs):
    return _normalize([Fraction(x) for x in coeffs])


def coeffs(a):
    return list(a)


def degree(a):
    return len(a) - 1


def is_zero(a):
    return not a


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    res = list(a)
    for i, x in enumerate(b):
        res[i] += x
    return _normalize(res)


def neg(a):
    return tuple(-x for x in a)


def sub(a, b):
    return add(a, neg(b))


def mul(a, b):
    if not a or not b:
        return ()
    res = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            res[i + j] += x * y
    return _normalize(res)


def scale(a, c):
    c = Fraction(c)
    if not c:
        return ()
    return tuple(x * c for x in a)


def shift(a, k):
    if not a:
        return ()
    return (Fraction(0),) * k + a


def power(a, e):
    result = (Fraction(1),)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def divrem(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        return (), tuple(a)
    quot = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = rem[i + db] / lead
        quot[i] = c
        if c:
            for j, y in enumerate(b):
                rem[i + j] -= c * y
    return _normalize(quot), _normalize(rem[:db])


def monic(a):
    if not a:
        return a
    return scale(a, 1 / a[-1])


def gcd(a, b):
    while b:
        a, b = b, divrem(a, b)[1]
    return monic(a)


def evaluate(a, x):
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def leading(a):
    return a[-1]


def equal(a, b):
    return a == b


def key(a):
    return a
