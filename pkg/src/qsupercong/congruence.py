"""Congruences of rational functions modulo cyclotomic-product moduli."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .exact import Poly, RatFunc, poly_gcd
from .qobjects import Modulus, cyclotomic, qpoch


class ParameterError(ValueError):
    """Parameters violate the constraints of the statement being checked."""


class IntegralityError(ArithmeticError):
    """A quantity that must be integral (an exponent, or p-adically) is not."""


class CoprimalityError(ArithmeticError):
    """The denominator of A - B is not invertible modulo M.

    Raised instead of reporting ``holds=False``: a congruence between rational
    functions only makes sense when the denominator is a unit modulo M, so this
    signals a violated coprimality lemma rather than a failed congruence.
    """

    def __init__(self, common: Poly, modulus: Modulus, description: str = ""):
        self.common = common
        self.modulus = modulus
        self.description = description
        msg = f"denominator shares factor {common} with modulus {modulus}"
        if description:
            msg = f"{description}: {msg}"
        super().__init__(msg)


@dataclass
class CongruenceReport:
    description: str
    parameters: dict
    holds: bool
    residue_witness: Poly = field(default_factory=Poly.zero)
    coprimality_ok: bool = True

    @property
    def witness_degree(self):
        if self.residue_witness.is_zero():
            return None
        return self.residue_witness.degree

    def __bool__(self):
        return self.holds and self.coprimality_ok


@dataclass
class CoprimalityReport:
    """gcd of a reduced denominator with 1 - q^n.

    ``coprime`` is the claim as stated (against all of 1 - q^n);
    ``coprime_to_phi_n`` looks at the Phi_n(q) factor alone.
    """

    k: int | None
    gcd_with_modulus: Poly
    coprime: bool
    coprime_to_phi_n: bool = True


def congruent(a, b, m: Modulus, description: str = "", parameters: dict | None = None,
              strict: bool = True) -> CongruenceReport:
    """Decide a == b (mod m) for rational functions with unit denominators.

    With ``strict`` a non-invertible denominator raises CoprimalityError;
    otherwise the report comes back with ``coprimality_ok=False``.
    """
    if not isinstance(a, RatFunc):
        a = RatFunc(a)
    if not isinstance(b, RatFunc):
        b = RatFunc(b)
    params = dict(parameters or {})
    diff = a - b
    if diff.is_zero():
        return CongruenceReport(description, params, True)
    den = diff.den
    if not den.is_constant():
        for f in m.factor_polys():
            g = poly_gcd(den, f)
            if not g.is_constant():
                if strict:
                    raise CoprimalityError(g, m, description)
                return CongruenceReport(description, params, False, Poly.zero(), False)
    rem = diff.num % m.expanded
    return CongruenceReport(description, params, rem.is_zero(), rem)


def _coprimality(frac: RatFunc, n: int, k=None) -> CoprimalityReport:
    target = Poly.monomial(n) - 1
    g = poly_gcd(frac.den, target)
    phi_ok = g.is_constant() or poly_gcd(g, cyclotomic(n)).is_constant()
    return CoprimalityReport(k, g, g.is_constant(), phi_ok)


def _require(cond: bool, msg: str):
    if not cond:
        raise ParameterError(msg)


def lemma_coprimality_prefactor(n: int, d: int, r: int, variant: str = "n") -> CoprimalityReport:
    """Reduced denominator of (q^r;q^d)_K/(q^d;q^d)_K against 1 - q^n.

    variant "n": K = (n-r)/d with n = r (mod d), r <= n.
    variant "dn": K = ((d-1)n-r)/d with d | n+r, gcd(r, d) = 1, r <= (d-1)n.
    """
    _require(n >= 1 and d >= 1, "n and d must be positive")
    if variant == "n":
        _require((n - r) % d == 0, f"n = r (mod d) fails for n={n}, r={r}, d={d}")
        _require(r <= n, f"r <= n fails for r={r}, n={n}")
        K = (n - r) // d
    elif variant == "dn":
        _require((n + r) % d == 0, f"d | n+r fails for n={n}, r={r}, d={d}")
        _require(gcd(r, d) == 1, f"gcd(r, d) = 1 fails for r={r}, d={d}")
        _require(r <= (d - 1) * n, f"r <= (d-1)n fails for r={r}")
        K = ((d - 1) * n - r) // d
    else:
        raise ParameterError(f"unknown variant {variant!r}")
    frac = qpoch(r, d, K) / qpoch(d, d, K)
    return _coprimality(frac, n)


def _theorem_range(n: int, d: int, r: int, variant: str) -> int:
    """Upper summation limit K, after checking the theorem-family constraints."""
    _require(n >= 1 and d >= 1, "n and d must be positive")
    _require(gcd(n, d) == 1, f"gcd(n, d) = 1 fails for n={n}, d={d}")
    if variant == "n":
        _require(n + d - n * d <= r <= n, f"n+d-nd <= r <= n fails for n={n}, d={d}, r={r}")
        _require((n - r) % d == 0, f"n = r (mod d) fails for n={n}, r={r}, d={d}")
        return (n - r) // d
    if variant == "dn":
        _require(d >= 2, "d >= 2 required")
        _require(d - n <= r <= d * n - n, f"d-n <= r <= dn-n fails for n={n}, d={d}, r={r}")
        _require((n + r) % d == 0, f"n = -r (mod d) fails for n={n}, r={r}, d={d}")
        return ((d - 1) * n - r) // d
    raise ParameterError(f"unknown variant {variant!r}")


def lemma_coprimality_gk(n: int, d: int, r: int, k: int, variant: str = "n") -> CoprimalityReport:
    """(1-q^N)(q^d;q^d)_{k-1}(q^{2r};q^d)_{k-1} / ((q^r;q^d)_k (q^r;q^d)_{k-1}), N = n or (d-1)n."""
    K = _theorem_range(n, d, r, variant)
    _require(1 <= k <= K, f"k={k} outside 1..{K}")
    N = n if variant == "n" else (d - 1) * n
    numer = RatFunc(1 - Poly.monomial(N)) * qpoch(d, d, k - 1) * qpoch(2 * r, d, k - 1)
    frac = numer / (qpoch(r, d, k) * qpoch(r, d, k - 1))
    return _coprimality(frac, n, k)


def lemma_coprimality_qint(n: int, d: int, k: int, variant: str = "n") -> CoprimalityReport:
    """(1 - q^N)/(1 - q^{dk}) with N = n or (d-1)n, against 1 - q^n.

    The admissible k are 1..n-1: the largest K over all admissible r in
    either theorem family is n - 1.
    """
    _require(n >= 1 and d >= 1, "n and d must be positive")
    _require(gcd(n, d) == 1, f"gcd(n, d) = 1 fails for n={n}, d={d}")
    _require(1 <= k <= n - 1, f"k={k} outside 1..{n - 1}")
    if variant == "n":
        N = n
    elif variant == "dn":
        _require(d >= 2, "d >= 2 required")
        N = (d - 1) * n
    else:
        raise ParameterError(f"unknown variant {variant!r}")
    frac = RatFunc(1 - Poly.monomial(N), 1 - Poly.monomial(d * k))
    return _coprimality(frac, n, k)


__all__ = [
    "CongruenceReport",
    "CoprimalityError",
    "CoprimalityReport",
    "IntegralityError",
    "ParameterError",
    "congruent",
    "lemma_coprimality_gk",
    "lemma_coprimality_prefactor",
    "lemma_coprimality_qint",
]
