"""q-notation: q-integers, q-shifted factorials, cyclotomic polynomials, moduli."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import Poly, RatFunc


def divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@functools.lru_cache(maxsize=None)
def cyclotomic(t: int) -> Poly:
    """Phi_t(q), by dividing q^t - 1 by Phi_s for every proper divisor s of t."""
    if t < 1:
        raise ValueError(f"cyclotomic index must be positive, got {t}")
    p = Poly.monomial(t) - 1
    for s in divisors(t)[:-1]:
        quot, rem = p.divrem(cyclotomic(s))
        assert rem.is_zero()
        p = quot
    return p


class CycloProduct:
    """coeff * q^qexp * prod_t Phi_t(q)^exps[t], exponents of either sign.

    Products and quotients are exponent bookkeeping, so no gcd is ever needed:
    distinct cyclotomic polynomials are coprime and each is coprime to q.
    """

    __slots__ = ("coeff", "qexp", "exps")

    def __init__(self, coeff=1, qexp: int = 0, exps: dict | None = None):
        self.coeff = Fraction(coeff)
        self.qexp = qexp
        self.exps = {t: e for t, e in (exps or {}).items() if e} if self.coeff else {}

    @classmethod
    def one_minus_q_power(cls, a: int) -> "CycloProduct":
        """1 - q^a = -prod_{t|a} Phi_t (a > 0); q^a prod_{t||a|} Phi_t (a < 0)."""
        if a == 0:
            return cls(0)
        if a > 0:
            return cls(-1, 0, {t: 1 for t in divisors(a)})
        return cls(1, a, {t: 1 for t in divisors(-a)})

    @classmethod
    def q_int(cls, m: int) -> "CycloProduct":
        if m == 0:
            return cls(0)
        return cls.one_minus_q_power(m) / cls.one_minus_q_power(1)

    @classmethod
    def poch(cls, a: int, d: int, k: int) -> "CycloProduct":
        """(q^a; q^d)_k."""
        coeff, qexp, exps = Fraction(1), 0, {}
        for j in range(k):
            f = cls.one_minus_q_power(a + j * d)
            if not f.coeff:
                return cls(0)
            coeff *= f.coeff
            qexp += f.qexp
            for t, e in f.exps.items():
                exps[t] = exps.get(t, 0) + e
        return cls(coeff, qexp, exps)

    def is_zero(self) -> bool:
        return not self.coeff

    def __mul__(self, other):
        if not isinstance(other, CycloProduct):
            return CycloProduct(self.coeff * Fraction(other), self.qexp, self.exps)
        if self.is_zero() or other.is_zero():
            return CycloProduct(0)
        exps = dict(self.exps)
        for t, e in other.exps.items():
            exps[t] = exps.get(t, 0) + e
        return CycloProduct(self.coeff * other.coeff, self.qexp + other.qexp, exps)

    __rmul__ = __mul__

    def inverse(self) -> "CycloProduct":
        if self.is_zero():
            raise ZeroDivisionError("inverse of a zero product")
        return CycloProduct(1 / self.coeff, -self.qexp, {t: -e for t, e in self.exps.items()})

    def __truediv__(self, other):
        if not isinstance(other, CycloProduct):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        if self.is_zero():
            return CycloProduct(0 if e else 1)
        return CycloProduct(self.coeff ** e, self.qexp * e, {t: x * e for t, x in self.exps.items()})

    def __neg__(self):
        return CycloProduct(-self.coeff, self.qexp, self.exps)

    def times_q(self, e: int) -> "CycloProduct":
        return CycloProduct(self.coeff, self.qexp + e, self.exps)

    def numerator_den(self) -> tuple[Poly, Poly]:
        num = _cyclo_prod({t: e for t, e in self.exps.items() if e > 0})
        den = _cyclo_prod({t: -e for t, e in self.exps.items() if e < 0})
        if self.qexp > 0:
            num = num.shift(self.qexp)
        elif self.qexp < 0:
            den = den.shift(-self.qexp)
        return num * self.coeff, den

    def to_ratfunc(self) -> RatFunc:
        if self.is_zero():
            return RatFunc.zero()
        num, den = self.numerator_den()
        return RatFunc._trusted(num, den)

    def __repr__(self):
        return f"CycloProduct({self.coeff}, q^{self.qexp}, {dict(sorted(self.exps.items()))})"


def _cyclo_prod(exps: dict) -> Poly:
    p = Poly.one()
    for t in sorted(exps):
        p = p * cyclotomic(t) ** exps[t]
    return p


def sum_products(terms) -> RatFunc:
    """Exact sum of CycloProducts as a canonical RatFunc.

    Each term converts without a gcd; the running sum cancels as it goes,
    which keeps intermediate degrees far below those of a global lcm.
    """
    total = RatFunc.zero()
    for term in terms:
        if not term.is_zero():
            total = total + term.to_ratfunc()
    return total


def q_integer(m: int) -> RatFunc:
    """[m] = (1 - q^m)/(1 - q); Laurent for m < 0."""
    if m >= 0:
        return RatFunc._trusted(Poly([1] * m), Poly.one())
    # (1 - q^m)/(1 - q) = -(1 + q + ... + q^{|m|-1}) / q^{|m|}
    return RatFunc._trusted(-Poly([1] * (-m)), Poly.monomial(-m))


@dataclass(frozen=True)
class QPochhammerSpec:
    """(c*q^a; q^d)_k, with c = 1 in the common case."""

    a: int
    d: int
    k: int
    c: Fraction = Fraction(1)

    def __post_init__(self):
        if self.d < 1:
            raise ValueError(f"step d must be positive, got {self.d}")
        if self.k < 0:
            raise ValueError(f"length k must be nonnegative, got {self.k}")


def q_pochhammer(spec: QPochhammerSpec | None = None, *, a: int = 0, d: int = 1, k: int = 0,
                 c=1) -> RatFunc:
    """prod_{j<k} (1 - c*q^{a+jd}); returns 1 for k = 0."""
    if spec is None:
        spec = QPochhammerSpec(a, d, k, Fraction(c))
    a, d, k, c = spec.a, spec.d, spec.k, Fraction(spec.c)
    num = Poly.one()
    neg_shift = 0
    for j in range(k):
        e = a + j * d
        if e >= 0:
            num = num * (1 - Poly.monomial(e, c))
        else:
            num = num * (Poly.monomial(-e) - c)
            neg_shift -= e
    if num.is_zero():
        return RatFunc.zero()
    if neg_shift == 0:
        return RatFunc._trusted(num, Poly.one())
    if c == 1:
        # q does not divide any factor q^|e| - 1 or 1 - q^e (e > 0)
        return RatFunc._trusted(num, Poly.monomial(neg_shift))
    return RatFunc(num, Poly.monomial(neg_shift))


def qpoch(a: int, d: int, k: int) -> RatFunc:
    """Shorthand for (q^a; q^d)_k."""
    return q_pochhammer(QPochhammerSpec(a, d, k))


@dataclass(frozen=True)
class Modulus:
    """Product of cyclotomic powers, optionally times extra polynomial factors.

    The extra factors carry the specialised (1 - a q^n)-type factors of the
    vanishing lemmas; for the theorem moduli they are empty.
    """

    factors: tuple[tuple[int, int], ...]
    extra: tuple[Poly, ...] = ()
    expanded: Poly = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        merged: dict[int, int] = {}
        for t, e in self.factors:
            if t < 1 or e < 1:
                raise ValueError(f"bad modulus factor ({t}, {e})")
            merged[t] = merged.get(t, 0) + e
        object.__setattr__(self, "factors", tuple(sorted(merged.items())))
        prod = Poly.one()
        for t, e in self.factors:
            prod = prod * cyclotomic(t) ** e
        for f in self.extra:
            prod = prod * f
        object.__setattr__(self, "expanded", prod)

    def factor_polys(self) -> list[Poly]:
        """Irreducible-ish pieces for cheap per-factor coprimality rejection."""
        return [cyclotomic(t) for t, _ in self.factors] + list(self.extra)

    def label(self) -> str:
        parts = [f"Phi_{t}" + (f"^{e}" if e > 1 else "") for t, e in self.factors]
        parts += [f"({f})" for f in self.extra]
        return "*".join(parts) or "1"

    def __str__(self):
        return self.label()


def modulus_build(n: int, phi_power: int) -> Modulus:
    """[n] * Phi_n(q)^phi_power, with [n] = prod_{t|n, t>1} Phi_t."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n == 1:
        return Modulus(((1, phi_power),))
    factors = [(t, 1) for t in divisors(n) if 1 < t < n]
    factors.append((n, phi_power + 1))
    return Modulus(tuple(factors))


def phi_only_modulus(n: int, power: int) -> Modulus:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return Modulus(((n, power),))


def q_integer_modulus(n: int) -> Modulus:
    """[n] alone (n >= 2)."""
    if n < 2:
        raise ValueError("[1] = 1 is not a proper modulus")
    return Modulus(tuple((t, 1) for t in divisors(n) if t > 1))
