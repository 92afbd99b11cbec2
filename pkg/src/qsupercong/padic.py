"""p-adic helpers: valuations, truncated p-adic numbers, Bernoulli and harmonic numbers, Morita's Gamma."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ._kernels import unit_product
from .congruence import IntegralityError

BERNOULLI_BOUND = 200
GAMMA_MODULUS_BOUND = 10**7


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def _int_valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation(x, p: int) -> float | int:
    """v_p(x) for a nonzero rational; +inf for 0."""
    x = Fraction(x)
    if x == 0:
        return float("inf")
    return _int_valuation(x.numerator, p) - _int_valuation(x.denominator, p)


def residue(x, p: int, m: int) -> int:
    """The integer in [0, p^m) congruent to the p-integral rational x."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise IntegralityError(f"{x} is not {p}-integral")
    mod = p**m
    return x.numerator * pow(x.denominator, -1, mod) % mod


@dataclass(frozen=True)
class PAdicValue:
    """p^valuation * u with u known modulo p^k.

    A zero flag means "0 up to O(p^valuation)": the value is divisible by
    p^valuation and nothing more is known.
    """

    p: int
    k: int
    valuation: int
    unit_residue: int
    zero: bool = False

    def __post_init__(self):
        if self.zero:
            object.__setattr__(self, "unit_residue", 0)
            return
        if self.k < 1:
            raise ValueError("relative precision must be positive")
        if self.unit_residue % self.p == 0:
            raise ValueError("unit residue must be coprime to p")
        object.__setattr__(self, "unit_residue", self.unit_residue % self.p**self.k)

    @classmethod
    def from_rational(cls, x, p: int, k: int) -> "PAdicValue":
        x = Fraction(x)
        if x == 0:
            return cls(p, k, 10**9, 0, zero=True)
        v = valuation(x, p)
        u = x / Fraction(p) ** v
        return cls(p, k, v, residue(u, p, k))

    @classmethod
    def from_residue(cls, r: int, p: int, m: int) -> "PAdicValue":
        """The class of the integer r modulo p^m."""
        r %= p**m
        if r == 0:
            return cls(p, m, m, 0, zero=True)
        v = _int_valuation(r, p)
        return cls(p, m - v, v, r // p**v)

    @property
    def absolute_precision(self) -> int:
        return self.valuation if self.zero else self.valuation + self.k

    def _check(self, other):
        if not isinstance(other, PAdicValue):
            other = PAdicValue.from_rational(other, self.p, self.k)
        if other.p != self.p:
            raise ValueError("mixing different primes")
        return other

    def __mul__(self, other):
        other = self._check(other)
        if self.zero or other.zero:
            # known to be divisible by the sum of the lower bounds
            v = self.valuation + other.valuation
            return PAdicValue(self.p, min(self.k, other.k), v, 0, zero=True)
        k = min(self.k, other.k)
        return PAdicValue(self.p, k, self.valuation + other.valuation,
                          self.unit_residue * other.unit_residue)

    __rmul__ = __mul__

    def __neg__(self):
        if self.zero:
            return self
        return PAdicValue(self.p, self.k, self.valuation, -self.unit_residue)

    def __add__(self, other):
        other = self._check(other)
        prec = min(self.absolute_precision, other.absolute_precision)
        lo = min(self.valuation, other.valuation)
        if lo >= prec:
            return PAdicValue(self.p, 1, prec, 0, zero=True)
        m = prec - lo
        total = 0
        for x in (self, other):
            if not x.zero:
                total += x.unit_residue * self.p ** (x.valuation - lo)
        r = PAdicValue.from_residue(total, self.p, m)
        if r.zero:
            return PAdicValue(self.p, 1, prec, 0, zero=True)
        return PAdicValue(self.p, r.k, lo + r.valuation, r.unit_residue)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def inverse(self):
        if self.zero:
            raise ZeroDivisionError("inverse of a p-adic zero")
        return PAdicValue(self.p, self.k, -self.valuation,
                          pow(self.unit_residue, -1, self.p**self.k))

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def residue_mod(self, m: int) -> int:
        """The value as an integer modulo p^m; needs valuation >= 0 and enough precision."""
        if self.zero:
            if self.valuation < m:
                raise ArithmeticError(f"value only known modulo p^{self.valuation}")
            return 0
        if self.valuation < 0:
            raise IntegralityError(f"valuation {self.valuation} < 0")
        if self.absolute_precision < m:
            raise ArithmeticError(f"value only known modulo p^{self.absolute_precision}")
        return self.unit_residue * self.p**self.valuation % self.p**m

    def divisible_by(self, m: int) -> bool:
        if self.zero:
            if self.valuation < m:
                raise ArithmeticError(f"value only known modulo p^{self.valuation}")
            return True
        return self.valuation >= m


@functools.lru_cache(maxsize=None)
def _bernoulli_table(m: int) -> tuple[Fraction, ...]:
    b = [Fraction(1)]
    for n in range(1, m + 1):
        s = sum(comb(n + 1, j) * b[j] for j in range(n))
        b.append(-s / (n + 1))
    return tuple(b)


def bernoulli(m: int) -> Fraction:
    """B_m with B_1 = -1/2, from sum_{j<=m} C(m+1, j) B_j = 0."""
    if m < 0 or m > BERNOULLI_BOUND:
        raise ValueError(f"bernoulli index must be in 0..{BERNOULLI_BOUND}, got {m}")
    return _bernoulli_table(BERNOULLI_BOUND)[m]


def harmonic(m: int, order: int = 1) -> Fraction:
    return sum((Fraction(1, k**order) for k in range(1, m + 1)), Fraction(0))


@functools.lru_cache(maxsize=4096)
def _gamma_integer(n: int, p: int, k: int) -> int:
    mod = p**k
    prod = unit_product(n, p, mod)
    return (-prod if n % 2 else prod) % mod


def padic_gamma(x, p: int, k: int) -> PAdicValue:
    """Gamma_p(x) mod p^k, through the integer N in [0, p^k) with N = x mod p^k."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if k < 1:
        raise ValueError("precision must be positive")
    if p**k > GAMMA_MODULUS_BOUND:
        raise ValueError(f"p^k = {p**k} exceeds {GAMMA_MODULUS_BOUND}")
    x = Fraction(x)
    if x.denominator % p == 0:
        raise IntegralityError(f"{x} is not a {p}-adic integer")
    n = residue(x, p, k)
    return PAdicValue(p, k, 0, _gamma_integer(n, p, k))


__all__ = [
    "IntegralityError",
    "PAdicValue",
    "bernoulli",
    "harmonic",
    "is_prime",
    "padic_gamma",
    "residue",
    "valuation",
]
