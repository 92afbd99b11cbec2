"""Classical (q = 1) supercongruences, checked exactly at individual primes.

Sums are formed as exact rationals and only then reduced modulo p^m, since
single terms may carry negative p-adic valuation that cancels in the sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .congruence import CongruenceReport, IntegralityError, ParameterError
from .exact import Poly, ratfunc_eval
from .padic import PAdicValue, bernoulli, harmonic, is_prime, padic_gamma, residue, valuation
from .theorems import TheoremParams, lhs_sum

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
THREE_QUARTERS = Fraction(3, 4)


@dataclass(frozen=True)
class RationalPochhammer:
    """(a)_k = a(a+1)...(a+k-1)."""

    base: Fraction
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("Pochhammer length must be nonnegative")
        object.__setattr__(self, "base", Fraction(self.base))

    def value(self) -> Fraction:
        out = Fraction(1)
        for j in range(self.length):
            out *= self.base + j
        return out


def poch(a, k: int) -> Fraction:
    return RationalPochhammer(Fraction(a), k).value()


def hypergeometric_sum(d: int, r: int, upper: int) -> Fraction:
    """sum_{k=0}^{upper} (2dk+r) (r/d)_k^4 / k!^4, the q -> 1 image of the theorem LHS."""
    a = Fraction(r, d)
    total = Fraction(0)
    ratio = Fraction(1)  # (a)_k / k!
    for k in range(upper + 1):
        if k:
            ratio = ratio * (a + k - 1) / k
        total += (2 * d * k + r) * ratio**4
    return total


SERIES = {"C2": (2, 1), "G2": (4, 1)}


def _upper(series_id: str, p: int, power: int, upper: str) -> int:
    if upper not in ("short", "long"):
        raise ParameterError(f"upper must be 'short' or 'long', not {upper!r}")
    if series_id == "C2":
        return (p**power - 1) // 2 if upper == "short" else p**power - 1
    if power != 1:
        raise ParameterError("the G2 series is only taken at power 1")
    if upper == "long":
        return p - 1
    return (p - 1) // 4 if p % 4 == 1 else (3 * p - 1) // 4


def classical_sum(series_id: str, p: int, power: int = 1, upper: str = "short") -> Fraction:
    """C2: (4k+1)(1/2)_k^4/k!^4; G2: (8k+1)(1/4)_k^4/k!^4; summed to the chosen limit."""
    if series_id not in SERIES:
        raise ParameterError(f"unknown series {series_id!r}")
    if p < 3 or not is_prime(p):
        raise ParameterError(f"p must be an odd prime, got {p}")
    if power < 1:
        raise ParameterError("power must be positive")
    d, r = SERIES[series_id]
    return hypergeometric_sum(d, r, _upper(series_id, p, power, upper))


# ---------------------------------------------------------------------------
# statements


def _cor_rhs(p: int, K: int, lead: int) -> Fraction:
    """(1/2)_K/(1)_K (lead*p - (lead*p)^3/16 H_K^(2)) + (lead*p)^4 sum_{k<=K} (1)_{k-1}(1/2)_{k-1}/((4k-3)^3 (1/4)_{k-1}^2)."""
    N = lead * p
    head = poch(HALF, K) / poch(1, K) * (N - Fraction(N**3, 16) * harmonic(K, 2))
    tail = Fraction(0)
    for k in range(1, K + 1):
        tail += poch(1, k - 1) * poch(HALF, k - 1) / ((4 * k - 3) ** 3 * poch(QUARTER, k - 1) ** 2)
    return head + N**4 * tail


def _sun_zw_sum(p: int) -> Fraction:
    return sum((Fraction(16 ** (k - 1), (2 * k - 1) ** 3 * comb(2 * k - 2, k - 1) ** 2)
                for k in range(1, (p - 1) // 2 + 1)), Fraction(0))


def _gamma_ratio(p: int, m: int) -> PAdicValue:
    """Gamma_p(1/2) Gamma_p(1/4) / Gamma_p(3/4) modulo p^m."""
    return padic_gamma(HALF, p, m) * padic_gamma(QUARTER, p, m) / padic_gamma(THREE_QUARTERS, p, m)


@dataclass(frozen=True)
class _Check:
    label: dict
    lhs: Fraction
    rhs: object  # Fraction or PAdicValue
    modulus_power: int


def _cases(statement_id: str, p: int, power: int | None) -> list[_Check]:
    def need(cond, msg):
        if not cond:
            raise ParameterError(f"{statement_id}: {msg} (p={p})")

    if statement_id == "VanHamme_C2":
        return [_Check({}, classical_sum("C2", p), Fraction(p), 3)]
    if statement_id == "Long_C2_p4":
        need(p >= 5, "needs p >= 5")
        return [_Check({}, classical_sum("C2", p), Fraction(p), 4)]
    if statement_id in ("GW_gen", "WangHu"):
        need(p >= 5, "needs p >= 5")
        powers = (1, 2) if power is None else (power,)
        out = []
        for r in powers:
            need(r >= 1, "power must be positive")
            rhs = Fraction(p**r)
            m = r + 3
            if statement_id == "WangHu":
                rhs += Fraction(7, 6) * p ** (r + 3) * bernoulli(p - 3)
                m = r + 4
            out.append(_Check({"r": r}, classical_sum("C2", p, r), rhs, m))
        return out
    if statement_id in ("VanHamme_G2", "He_G2_p4"):
        need(p % 4 == 1, "needs p = 1 (mod 4)")
        m = 3 if statement_id == "VanHamme_G2" else 4
        return [_Check({}, classical_sum("G2", p), _gamma_ratio(p, m) * p, m)]
    if statement_id == "Swisher":
        need(p % 4 == 3 and p >= 5, "needs p = 3 (mod 4), p >= 5")
        rhs = _gamma_ratio(p, 4) * Fraction(-3 * p * p, 2)
        return [_Check({}, classical_sum("G2", p), rhs, 4)]
    if statement_id == "Cor13":
        need(p % 4 == 1, "needs p = 1 (mod 4)")
        rhs = _cor_rhs(p, (p - 1) // 4, 1)
        return [_Check({"M": u}, classical_sum("G2", p, 1, u), rhs, 5) for u in ("short", "long")]
    if statement_id == "Cor15":
        need(p % 4 == 3, "needs p = 3 (mod 4)")
        rhs = _cor_rhs(p, (3 * p - 1) // 4, 3)
        return [_Check({"M": u}, classical_sum("G2", p, 1, u), rhs, 5) for u in ("short", "long")]
    if statement_id == "Cor16":
        need(p % 4 == 3 and p >= 5, "needs p = 3 (mod 4), p >= 5")
        K = (3 * p - 1) // 4
        lhs = poch(HALF, K) / poch(1, K) * (3 * p - Fraction(27 * p**3, 16) * harmonic(K, 2))
        g = padic_gamma(QUARTER, p, 4)
        rhs = g * g * padic_gamma(HALF, p, 4) * Fraction((-1) ** ((p - 3) // 4) * 3 * p * p, 2)
        return [_Check({}, lhs, rhs, 4)]
    if statement_id == "SunZW":
        need(p >= 5, "needs p >= 5")
        return [_Check({}, _sun_zw_sum(p), Fraction(7, 4) * bernoulli(p - 3), 1)]
    if statement_id == "SunZH":
        need(p >= 5, "needs p >= 5")
        return [_Check({}, harmonic((p - 1) // 2, 2), Fraction(7, 3) * p * bernoulli(p - 3), 2)]
    raise ParameterError(f"unknown statement {statement_id!r}")


CLASSICAL_STATEMENTS = ("VanHamme_C2", "Long_C2_p4", "GW_gen", "WangHu", "VanHamme_G2",
                        "He_G2_p4", "Swisher", "Cor13", "Cor15", "Cor16", "SunZW", "SunZH")

ADMISSIBLE_PRIMES = {
    "VanHamme_C2": (5, 7, 11, 13),
    "Long_C2_p4": (5, 7, 11, 13),
    "GW_gen": (5, 7, 11, 13),
    "WangHu": (5, 7, 11, 13),
    "VanHamme_G2": (5, 13),
    "He_G2_p4": (5, 13),
    "Swisher": (7, 11),
    "Cor13": (5, 13),
    "Cor15": (7, 11),
    "Cor16": (7, 11),
    "SunZW": (5, 7, 11, 13),
    "SunZH": (5, 7, 11, 13),
}


def _side_residue(x, p: int, m: int, what: str) -> int:
    if isinstance(x, PAdicValue):
        return x.residue_mod(m)
    if x != 0 and valuation(x, p) < 0:
        raise IntegralityError(f"{what} = {x} has {p}-adic valuation {valuation(x, p)} < 0")
    return residue(x, p, m)


def verify_classical(statement_id: str, p: int, power: int | None = None) -> CongruenceReport:
    """LHS == RHS mod p^m, both reduced exactly; every sub-case must hold.

    ``power`` picks r for GW_gen / WangHu (default: both r = 1 and r = 2).
    The witness is the constant polynomial (LHS - RHS mod p^m).
    """
    if p < 3 or not is_prime(p):
        raise ParameterError(f"p must be an odd prime, got {p}")
    params = {"statement": statement_id, "p": p}
    if power is not None:
        params["r"] = power
    for case in _cases(statement_id, p, power):
        m = case.modulus_power
        mod = p**m
        lhs = _side_residue(case.lhs, p, m, "LHS")
        rhs = _side_residue(case.rhs, p, m, "RHS")
        diff = (lhs - rhs) % mod
        if diff:
            return CongruenceReport(f"{statement_id} mod {p}^{m}", {**params, **case.label},
                                    False, Poly.constant(diff))
    return CongruenceReport(f"{statement_id}", params, True)


def q_to_1_crosscheck(p: TheoremParams) -> bool:
    """The q-LHS at q = 1 against the independently summed classical series."""
    if not is_prime(p.n):
        raise ParameterError(f"n = {p.n} is not prime")
    at_one = ratfunc_eval(lhs_sum(p), 1)
    if (p.d, p.r) in ((2, 1), (4, 1)) and p.M in (p.n - 1, _upper("C2" if p.d == 2 else "G2", p.n, 1, "short")):
        series = "C2" if p.d == 2 else "G2"
        upper = "short" if p.M == _upper(series, p.n, 1, "short") else "long"
        classical = classical_sum(series, p.n, 1, upper)
    else:
        classical = hypergeometric_sum(p.d, p.r, p.M)
    return at_one == classical


__all__ = [
    "ADMISSIBLE_PRIMES",
    "CLASSICAL_STATEMENTS",
    "RationalPochhammer",
    "classical_sum",
    "hypergeometric_sum",
    "q_to_1_crosscheck",
    "verify_classical",
]
