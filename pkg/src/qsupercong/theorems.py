"""Both sides of the q-supercongruences, and their verification.

Families
--------
theorem1 : gcd(n,d)=1, n+d-nd <= r <= n, n = r (mod d); K = (n-r)/d.
theorem2 : gcd(n,d)=1, d >= 2, d-n <= r <= dn-n, n = -r (mod d); K = ((d-1)n-r)/d.

The common left-hand side is

    sum_{k=0}^{M} [2dk+r] (q^r;q^d)_k^4 / (q^d;q^d)_k^4 * q^{(d-2r)k}

with M = K ("short") or M = n-1 ("long"); both are claimed modulo [n]Phi_n(q)^4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .congruence import (
    CongruenceReport,
    CoprimalityError,
    IntegralityError,
    ParameterError,
    _theorem_range,
    congruent,
)
from .exact import Poly, RatFunc
from .qobjects import (
    CycloProduct,
    Modulus,
    modulus_build,
    q_integer,
    q_pochhammer,
    qpoch,
    sum_products,
)

FAMILIES = ("theorem1", "theorem2")
_VARIANT = {"theorem1": "n", "theorem2": "dn"}


def exact_div(a: int, b: int, what: str = "exponent") -> int:
    if a % b:
        raise IntegralityError(f"{what} {a}/{b} is not an integer")
    return a // b


@dataclass(frozen=True, order=True)
class TheoremParams:
    family: str
    n: int
    d: int
    r: int
    m_choice: str = "short"

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}")
        if self.m_choice not in ("short", "long"):
            raise ParameterError(f"m_choice must be 'short' or 'long', not {self.m_choice!r}")
        _theorem_range(self.n, self.d, self.r, _VARIANT[self.family])

    @property
    def variant(self) -> str:
        return _VARIANT[self.family]

    @property
    def K(self) -> int:
        return _theorem_range(self.n, self.d, self.r, self.variant)

    @property
    def M(self) -> int:
        return self.K if self.m_choice == "short" else self.n - 1

    def with_m(self, m_choice: str) -> "TheoremParams":
        return TheoremParams(self.family, self.n, self.d, self.r, m_choice)

    def as_dict(self) -> dict:
        return {"family": self.family, "n": self.n, "d": self.d, "r": self.r, "M": self.m_choice}


def summand_product(d: int, r: int, k: int) -> CycloProduct:
    """[2dk+r] (q^r;q^d)_k^4/(q^d;q^d)_k^4 q^{(d-2r)k}, factored."""
    ratio = CycloProduct.poch(r, d, k) / CycloProduct.poch(d, d, k)
    return (CycloProduct.q_int(2 * d * k + r) * ratio ** 4).times_q((d - 2 * r) * k)


def summand(d: int, r: int, k: int) -> RatFunc:
    return summand_product(d, r, k).to_ratfunc()


def partial_sum(d: int, r: int, upper: int) -> RatFunc:
    return sum_products(summand_product(d, r, k) for k in range(upper + 1))


def lhs_sum(p: TheoremParams) -> RatFunc:
    return partial_sum(p.d, p.r, p.M)


def qd_over_qint_sq(d: int, k: int) -> CycloProduct:
    """q^{kd}/[kd]^2."""
    return (CycloProduct.q_int(k * d) ** -2).times_q(k * d)


def _rhs_terms(N: int, d: int, r: int, K: int, pre_exp: int, tail_exp) -> list[CycloProduct]:
    """Shared shape of both theorems, with [N] in place of [n], expanded into products."""
    qN = CycloProduct.q_int(N)
    one_minus_q = CycloProduct.one_minus_q_power(1)
    pre = (CycloProduct.poch(2 * r, d, K) / CycloProduct.poch(d, d, K)).times_q(pre_exp)
    terms = [pre * qN]
    for k in range(1, K + 1):
        s = qd_over_qint_sq(d, k)
        terms.append(-(pre * qN ** 3 * s))
        terms.append(-(pre * qN ** 4 * one_minus_q * s))
    for k in range(1, K + 1):
        term = CycloProduct.poch(d, d, k - 1) * CycloProduct.poch(2 * r, d, k - 1)
        term = term / (CycloProduct.q_int(d * k - d + r) ** 3 * CycloProduct.poch(r, d, k - 1) ** 2)
        terms.append((qN ** 4 * term).times_q(tail_exp(k)))
    return terms


def rhs_theorem1(n: int, d: int, r: int) -> RatFunc:
    K = _theorem_range(n, d, r, "n")
    pre_exp = exact_div(r * (r - n), d, "r(r-n)/d")

    def tail_exp(k):
        return exact_div((k * d - d - 2 * n + 2 * r) * (d - n), d, "(kd-d-2n+2r)(d-n)/d")

    return sum_products(_rhs_terms(n, d, r, K, pre_exp, tail_exp))


def rhs_theorem2(n: int, d: int, r: int) -> RatFunc:
    K = _theorem_range(n, d, r, "dn")
    pre_exp = exact_div(r * (n + r - d * n), d, "r(n+r-dn)/d")

    def tail_exp(k):
        return exact_div((k * d - d - 2 * d * n + 2 * n + 2 * r) * (d - d * n + n), d,
                         "(kd-d-2dn+2n+2r)(d-dn+n)/d")

    return sum_products(_rhs_terms((d - 1) * n, d, r, K, pre_exp, tail_exp))


def rhs(p: TheoremParams) -> RatFunc:
    if p.family == "theorem1":
        return rhs_theorem1(p.n, p.d, p.r)
    return rhs_theorem2(p.n, p.d, p.r)


def verify_theorem(p: TheoremParams, phi_power: int = 4, strict: bool = True) -> CongruenceReport:
    """LHS == RHS modulo [n]Phi_n(q)^phi_power (the claim is phi_power = 4)."""
    return congruent(lhs_sum(p), rhs(p), modulus_build(p.n, phi_power),
                     description=f"{p.family} mod [n]Phi_n^{phi_power}",
                     parameters=p.as_dict(), strict=strict)


# ---------------------------------------------------------------------------
# earlier results that the two theorems refine (all modulo [n]Phi_n(q)^3)

PRIOR_RESULTS = ("GW_C2", "LW_G2", "Guo_uni", "GS")


def rhs_gw_c2(n: int, printed: bool = False) -> RatFunc:
    """q^{(1-n)/2}[n] + (n^2-1)(1-q)^2/24 q^{(1-n)/2}[n]^3.

    ``printed=True`` uses (1-q^2) in place of (1-q)^2; that variant fails
    modulo [n]Phi_n(q)^3 for every odd n >= 3 and is kept only for comparison.
    """
    e = exact_div(1 - n, 2)
    qn = CycloProduct.q_int(n)
    if printed:
        factor = CycloProduct.one_minus_q_power(2)
    else:
        factor = CycloProduct.one_minus_q_power(1) ** 2
    corr = factor * Fraction(n * n - 1, 24) * qn ** 3
    return sum_products([qn.times_q(e), corr.times_q(e)])


def rhs_lw_g2(n: int) -> RatFunc:
    K = exact_div(n - 1, 4)
    qn = CycloProduct.q_int(n)
    pre = (CycloProduct.poch(2, 4, K) / CycloProduct.poch(4, 4, K) * qn).times_q(exact_div(1 - n, 4))
    terms = [pre, pre * qn ** 2 * Fraction(n * n - 1, 24) * CycloProduct.one_minus_q_power(1) ** 2]
    for k in range(1, K + 1):
        s = (CycloProduct.q_int(4 * k - 2) ** -2).times_q(4 * k - 2)
        terms.append(pre * qn ** 2 * s)
    return sum_products(terms)


def rhs_guo_uni(n: int, d: int, r: int) -> RatFunc:
    K = (n - r) // d
    qn = CycloProduct.q_int(n)
    pre = (qn * CycloProduct.poch(2 * r, d, K) / CycloProduct.poch(d, d, K)).times_q(
        exact_div(r * (r - n), d))
    terms = [pre] + [-(pre * qn ** 2 * qd_over_qint_sq(d, k)) for k in range(1, K + 1)]
    return sum_products(terms)


def rhs_gs(n: int, d: int, r: int) -> RatFunc:
    if d == 2:
        return RatFunc.zero()
    K = ((d - 1) * n - r) // d
    pre = CycloProduct.poch(2 * r, d, K) / CycloProduct.poch(d, d, K) * CycloProduct.q_int((d - 1) * n)
    return pre.times_q(exact_div(r * (n + r - d * n), d)).to_ratfunc()


def prior_params(result_id: str, n: int, d: int | None = None, r: int | None = None,
                 m_choice: str = "short") -> TheoremParams:
    """Validate the prior result's own hypotheses and map to a theorem instance."""
    if result_id == "GW_C2":
        if n < 1 or n % 2 == 0:
            raise ParameterError(f"GW_C2 needs a positive odd n, got {n}")
        if m_choice != "short":
            raise ParameterError("GW_C2 is stated for M = (n-1)/2 only")
        return TheoremParams("theorem1", n, 2, 1, m_choice)
    if result_id == "LW_G2":
        if n < 1 or n % 4 != 1:
            raise ParameterError(f"LW_G2 needs n = 1 (mod 4), got {n}")
        return TheoremParams("theorem1", n, 4, 1, m_choice)
    if d is None or r is None:
        raise ParameterError(f"{result_id} needs d and r")
    if result_id == "Guo_uni":
        if not (d >= 2 and 0 <= n - r <= d * n - d and gcd(d, r) == 1 and (n - r) % d == 0):
            raise ParameterError(
                f"Guo_uni needs d >= 2, 0 <= n-r <= dn-d, gcd(d,r)=1, n = r (mod d); got n={n}, d={d}, r={r}")
        return TheoremParams("theorem1", n, d, r, m_choice)
    if result_id == "GS":
        if not (d >= 2 and r <= d - 2 and n >= d - r and gcd(d, r) == 1 and (n + r) % d == 0):
            raise ParameterError(
                f"GS needs d >= 2, r <= d-2, n >= d-r, gcd(d,r)=1, n = -r (mod d); got n={n}, d={d}, r={r}")
        return TheoremParams("theorem2", n, d, r, m_choice)
    raise ParameterError(f"unknown prior result {result_id!r}")


def prior_rhs(result_id: str, p: TheoremParams) -> RatFunc:
    if result_id == "GW_C2":
        return rhs_gw_c2(p.n)
    if result_id == "LW_G2":
        return rhs_lw_g2(p.n)
    if result_id == "Guo_uni":
        return rhs_guo_uni(p.n, p.d, p.r)
    return rhs_gs(p.n, p.d, p.r)


def verify_prior(result_id: str, n: int, d: int | None = None, r: int | None = None,
                 m_choice: str = "short", strict: bool = True) -> CongruenceReport:
    """Check a prior result modulo [n]Phi_n^3, and that the refinement agrees with it.

    The report holds only when both LHS == prior RHS and theorem RHS == prior
    RHS modulo [n]Phi_n(q)^3.
    """
    p = prior_params(result_id, n, d, r, m_choice)
    m3 = modulus_build(p.n, 3)
    target = prior_rhs(result_id, p)
    params = {"result": result_id, **p.as_dict()}
    main = congruent(lhs_sum(p), target, m3, f"{result_id} mod [n]Phi_n^3", params, strict)
    if not main:
        return main
    refine = congruent(rhs(p), target, m3, f"{p.family} RHS refines {result_id}", params, strict)
    return refine


# ---------------------------------------------------------------------------
# vanishing lemmas for the tail k > K, under rational specialisation of a, b

def _shifted(c, e: int, d: int, k: int) -> RatFunc:
    return q_pochhammer(a=e, d=d, k=k, c=c)


def _lin(c: Fraction, e: int) -> tuple[Poly, int]:
    """1 - c q^e as (poly, shift), the value being poly * q^shift."""
    if e >= 0:
        return 1 - Poly.monomial(e, c), 0
    return Poly.monomial(-e) - c, e


def vanishing_tail_sum(K: int, n: int, d: int, r: int, a: Fraction, b: Fraction) -> RatFunc:
    """sum_{k=K+1}^{n-1} [2dk+r] (aq^r, q^r/a, q^r/b, q^r; q^d)_k / (aq^d, q^d/a, bq^d, q^d; q^d)_k b^k q^{(d-2r)k}.

    Every term is put over the common denominator prod_{j<n-1} of the
    step-j denominator factors, so only the final reduction needs a gcd.
    """
    ks = range(K + 1, n)
    if not ks:
        return RatFunc.zero()
    top = n - 1
    num_coeffs = (a, 1 / a, 1 / b, Fraction(1))
    den_coeffs = (a, 1 / a, b, Fraction(1))
    den_step = []
    for j in range(top):
        f = Poly.one()
        for c in den_coeffs:
            f = f * _lin(c, (j + 1) * d)[0]
        den_step.append(f)
    # suffix[k] = prod_{j=k}^{top-1} den_step[j]
    suffix = [Poly.one()] * (top + 1)
    for j in range(top - 1, -1, -1):
        suffix[j] = suffix[j + 1] * den_step[j]
    parts = []
    num_prod, num_shift = Poly.one(), 0
    for k in range(top + 1):
        if k in ks:
            qi = q_integer(2 * d * k + r)
            qi_shift = -qi.den.degree if not qi.den.is_constant() else 0
            shift = num_shift + qi_shift + (d - 2 * r) * k
            parts.append((qi.num * num_prod * suffix[k] * (b ** k), shift))
        for c in num_coeffs:
            f, sh = _lin(c, r + k * d)
            num_prod = num_prod * f
            num_shift += sh
    low = min(sh for _, sh in parts)
    total = Poly.zero()
    for poly, sh in parts:
        total = total + poly.shift(sh - low)
    den = suffix[0]
    if low < 0:
        return RatFunc(total, den.shift(-low))
    return RatFunc(total.shift(low), den)


def vanishing_tail_sum_termwise(K: int, n: int, d: int, r: int, a: Fraction, b: Fraction) -> RatFunc:
    """Same sum, term by term with reduced rational functions."""
    total = RatFunc.zero()
    for k in range(K + 1, n):
        num = _shifted(a, r, d, k) * _shifted(1 / a, r, d, k) * _shifted(1 / b, r, d, k) * qpoch(r, d, k)
        den = _shifted(a, d, d, k) * _shifted(1 / a, d, d, k) * _shifted(b, d, d, k) * qpoch(d, d, k)
        total = total + q_integer(2 * d * k + r) * num / den * (b ** k) * RatFunc.q_power((d - 2 * r) * k)
    return total


def lemma_vanishing_modulus(variant: str, n: int, d: int, a, b) -> Modulus:
    N = n if variant == "lemma21" else d * n - n
    a, b = Fraction(a), Fraction(b)
    qN = Poly.monomial(N)
    extra = (1 - qN * a, a - qN, b - qN)
    base = modulus_build(n, 1)
    return Modulus(base.factors, extra)


def verify_lemma_vanishing(variant: str, n: int, d: int, r: int, a_val, b_val,
                           strict: bool = True) -> CongruenceReport:
    """sum_{k=K0}^{n-1} of the (a, b)-deformed summand == 0, a and b specialised."""
    if variant == "lemma21":
        K = _theorem_range(n, d, r, "n")
    elif variant == "lemma22":
        K = _theorem_range(n, d, r, "dn")
    else:
        raise ParameterError(f"unknown lemma variant {variant!r}")
    a, b = Fraction(a_val), Fraction(b_val)
    if a == 0 or b == 0:
        raise ParameterError("a and b must be nonzero")
    m = lemma_vanishing_modulus(variant, n, d, a, b)
    for f in m.extra:
        if f.is_constant():
            raise ParameterError(f"specialisation a={a}, b={b} degenerates the modulus")
    total = vanishing_tail_sum(K, n, d, r, a, b)
    params = {"lemma": variant, "n": n, "d": d, "r": r, "a": str(a), "b": str(b)}
    try:
        return congruent(total, RatFunc.zero(), m, f"{variant} vanishing", params, strict=True)
    except CoprimalityError as exc:
        if strict:
            raise CoprimalityError(exc.common, m,
                                   f"{variant} at a={a}, b={b}: try another specialisation") from None
        return CongruenceReport(f"{variant} vanishing", params, False, Poly.zero(), False)


# ---------------------------------------------------------------------------

def enumerate_valid_params(family: str, n_max: int, d_max: int, r_window: int | None = None,
                           n_min: int = 1, d_min: int = 2) -> list[TheoremParams]:
    """All valid short-M tuples, r in [-w, w] U {n} with w = r_window or 2d+1."""
    if family not in FAMILIES:
        raise ParameterError(f"unknown family {family!r}")
    out = []
    for n in range(max(n_min, 1), n_max + 1):
        for d in range(max(d_min, 1), d_max + 1):
            w = 2 * d + 1 if r_window is None else r_window
            for r in sorted(set(range(-w, w + 1)) | {n}):
                try:
                    out.append(TheoremParams(family, n, d, r))
                except ParameterError:
                    continue
    return out
