"""The q-WZ pair F(m, k), G(m, k) and every exact step of the telescoping proof.

F and G are evaluated at integer points as rational functions of q; nothing
here is symbolic in m or k.  The convention 1/(q^d;q^d)_j = 0 for j < 0 makes
F(m, k) = 0 when m < k and G(m, k) = 0 when m < k or m = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .congruence import CongruenceReport, ParameterError, _theorem_range, congruent
from .exact import Poly, RatFunc
from .qobjects import (
    CycloProduct,
    modulus_build,
    phi_only_modulus,
    q_integer_modulus,
    sum_products,
)
from .congruence import IntegralityError
from .theorems import exact_div

P = CycloProduct.poch
Q = CycloProduct.q_int


@dataclass(frozen=True)
class WZPoint:
    m: int
    k: int
    d: int
    r: int

    def __post_init__(self):
        if self.m < 0 or self.k < 0:
            raise ParameterError(f"WZ point needs m, k >= 0, got ({self.m}, {self.k})")
        if self.d < 1:
            raise ParameterError(f"d must be positive, got {self.d}")


def _half(x: int, what: str) -> int:
    if x % 2:
        raise IntegralityError(f"{what} = {x}/2 is not an integer")
    return x // 2


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def F_product(pt: WZPoint) -> CycloProduct:
    m, k, d, r = pt.m, pt.k, pt.d, pt.r
    if m < k:
        return CycloProduct(0)
    # k and k-2m-1 have opposite parity, so the product is even
    e = _half(d * k * (k - 2 * m - 1), "dk(k-2m-1)") + (d - 2 * r) * m
    num = CycloProduct.q_int(2 * d * m + r) * P(r, d, m) ** 3 * P(r, d, m + k)
    den = P(d, d, m) ** 3 * P(d, d, m - k) * P(r, d, k) ** 2
    return (num / den * _sign(k)).times_q(e)


def G_product(pt: WZPoint) -> CycloProduct:
    m, k, d, r = pt.m, pt.k, pt.d, pt.r
    if m == 0 or m < k:
        return CycloProduct(0)
    e = _half(d * k * (k - 2 * m + 1), "dk(k-2m+1)") + (d - 2 * r) * (m - 1)
    num = P(r, d, m) ** 3 * P(r, d, m + k - 1)
    den = (CycloProduct.one_minus_q_power(1) ** 2 * P(d, d, m - 1) ** 3 * P(d, d, m - k)
           * P(r, d, k) ** 2)
    return (num / den * _sign(k - 1)).times_q(e)


def F(pt: WZPoint) -> RatFunc:
    return F_product(pt).to_ratfunc()


def G(pt: WZPoint) -> RatFunc:
    return G_product(pt).to_ratfunc()


def verify_wz_recurrence(pt: WZPoint) -> bool:
    """[dk-d+r]F(m,k-1) - [dk-d+2r]F(m,k) == G(m+1,k) - G(m,k), exactly."""
    m, k, d, r = pt.m, pt.k, pt.d, pt.r
    if k < 1:
        raise ParameterError("the recurrence needs k >= 1")
    lhs = sum_products([Q(d * k - d + r) * F_product(WZPoint(m, k - 1, d, r)),
                        -(Q(d * k - d + 2 * r) * F_product(pt))])
    rhs = sum_products([G_product(WZPoint(m + 1, k, d, r)), -G_product(pt)])
    return lhs == rhs


def wz_grid(m_max: int = 12, d_values=(2, 3, 4, 5)):
    """Points with 1 <= k <= m+1, m <= m_max, gcd(r, d) = 1, -d+1 <= r <= d+1."""
    for d in d_values:
        for r in range(-d + 1, d + 2):
            if gcd(r, d) != 1:
                continue
            for m in range(m_max + 1):
                for k in range(1, m + 2):
                    yield WZPoint(m, k, d, r)


def _range_for(n: int, d: int, r: int, variant: str) -> int:
    if variant not in ("n", "dn"):
        raise ParameterError(f"unknown variant {variant!r}")
    return _theorem_range(n, d, r, variant)


def telescoped_sides(K: int, d: int, r: int) -> tuple[RatFunc, RatFunc]:
    """(sum_{m=0}^{K} F(m,0), boundary term + weighted G-sum) for upper limit K."""
    left = sum_products(F_product(WZPoint(m, 0, d, r)) for m in range(K + 1))
    terms = []
    w = CycloProduct()  # prod_{j<k} [dj-d+2r]/[dj-d+r]
    for k in range(1, K + 1):
        terms.append(G_product(WZPoint(K + 1, k, d, r)) * w / Q(d * k - d + r))
        w = w * Q(d * k - d + 2 * r) / Q(d * k - d + r)
    terms.append(F_product(WZPoint(K, K, d, r)) * w)
    return left, sum_products(terms)


def verify_telescoping(n: int, d: int, r: int, variant: str = "n") -> bool:
    K = _range_for(n, d, r, variant)
    left, right = telescoped_sides(K, d, r)
    return left == right


def verify_quartic_identity(n: int, kd: int) -> bool:
    """(1-q^{n-kd})(1-q^{n+kd}) + (1-q^{kd})^2 q^{n-kd} - q^n(1-q^n)^2 - q^n(1-q^n)^3 == (1-q^n)^4."""
    one = RatFunc.one()

    def qp(e):
        return RatFunc.q_power(e)

    x = one - qp(n)
    lhs = ((one - qp(n - kd)) * (one - qp(n + kd)) + (one - qp(kd)) ** 2 * qp(n - kd)
           - qp(n) * x ** 2 - qp(n) * x ** 3)
    return lhs == x ** 4


def _qd_sum(K: int, d: int) -> RatFunc:
    """sum_{k=1}^{K} q^{kd}/[kd]^2."""
    return sum_products((Q(k * d) ** -2).times_q(k * d) for k in range(1, K + 1))


def _f_exponent_sum(K: int, d: int, r: int, N: int) -> RatFunc:
    """[N] - ([N]^3 + [N]^4 (1-q)) sum_{k=1}^{K} q^{kd}/[kd]^2."""
    qN = Q(N).to_ratfunc()
    return qN - (qN ** 3 + qN ** 4 * RatFunc(Poly([1, -1]))) * _qd_sum(K, d)


def lemma_F_sides(variant: str, n: int, d: int, r: int) -> tuple[RatFunc, RatFunc]:
    K = _range_for(n, d, r, variant)
    N = n if variant == "n" else (d - 1) * n
    e_left = exact_div(K * (d - N - 3 * r), 2, "(N-r)(d-N-3r)/2d")
    left = (Q(2 * N - r) * P(r, d, 2 * K) / P(d, d, K) ** 2).times_q(e_left).to_ratfunc()
    if variant == "n":
        e_right = exact_div(r * (r - n), d, "r(r-n)/d")
    else:
        e_right = exact_div(r * (n + r - d * n), d, "r(n+r-dn)/d")
    right = _sign(K) * RatFunc.q_power(e_right) * _f_exponent_sum(K, d, r, N)
    return left, right


def verify_lemma_F(variant: str, n: int, d: int, r: int) -> CongruenceReport:
    """The boundary-term congruence, modulo [n]Phi_n(q)^4."""
    left, right = lemma_F_sides(variant, n, d, r)
    return congruent(left, right, modulus_build(n, 4), f"lemma F ({variant})",
                     {"variant": variant, "n": n, "d": d, "r": r})


def verify_F_mid(n: int, d: int, r: int) -> CongruenceReport:
    """Product form of the boundary congruence, modulo Phi_n(q)^4."""
    K = _range_for(n, d, r, "n")
    left = (P(r, d, K) * P(n + d, d, K) / P(d, d, K) ** 2).to_ratfunc()
    qn = Q(n).to_ratfunc()
    e = exact_div(K * (n - d + r), 2, "(n-r)(n-d+r)/2d")
    s = _qd_sum(K, d)
    right = _sign(K) * RatFunc.q_power(e) * (1 - (qn ** 2 + qn ** 3 * RatFunc(Poly([1, -1]))) * s)
    return congruent(left, right, phi_only_modulus(n, 4), "F-mid",
                     {"n": n, "d": d, "r": r})


def _weight(d: int, r: int, k: int) -> CycloProduct:
    """prod_{j=1}^{k} [dj-d+2r]/[dj-d+r]."""
    w = CycloProduct()
    for j in range(1, k + 1):
        w = w * Q(d * j - d + 2 * r) / Q(d * j - d + r)
    return w


def g_final_sides(n: int, d: int, r: int, k: int, variant: str = "n") -> tuple[RatFunc, RatFunc]:
    K = _range_for(n, d, r, variant)
    if not 1 <= k <= K:
        raise ParameterError(f"k={k} outside 1..{K}")
    N = n if variant == "n" else (d - 1) * n
    left = (G_product(WZPoint(K + 1, k, d, r)) * _weight(d, r, k - 1)
            / Q(d * k - d + r)).to_ratfunc()
    if variant == "n":
        e = exact_div((k * d - d - 2 * n + 2 * r) * (d - n), d, "(kd-d-2n+2r)(d-n)/d")
    else:
        e = exact_div((k * d - d - 2 * d * n + 2 * n + 2 * r) * (d - d * n + n), d,
                      "(kd-d-2dn+2n+2r)(d-dn+n)/d")
    right = (Q(N) ** 4 * P(d, d, k) * P(2 * r, d, k - 1)
             / (Q(d * k) * Q(d * k - d + r) ** 2 * P(r, d, k) * P(r, d, k - 1)))
    return left, right.times_q(e).to_ratfunc()


def verify_G_congruence(n: int, d: int, r: int, k: int, variant: str = "n") -> CongruenceReport:
    """Weighted G-term against its [N]^4 form: mod Phi_n^5, and both sides 0 mod [n]."""
    left, right = g_final_sides(n, d, r, k, variant)
    params = {"variant": variant, "n": n, "d": d, "r": r, "k": k}
    main = congruent(left, right, phi_only_modulus(n, 5), "G-final mod Phi_n^5", params)
    if not main:
        return main
    qn_mod = q_integer_modulus(n)
    for side, label in ((left, "left"), (right, "right")):
        rep = congruent(side, RatFunc.zero(), qn_mod, f"G-final {label} side mod [n]", params)
        if not rep:
            return rep
    return main


def verify_iden(d: int, r: int, k: int) -> bool:
    if k < 1:
        raise ParameterError("iden needs k >= 1")
    if d * k - d + r == 0 or any(r + j * d == 0 for j in range(k)):
        raise ParameterError(f"iden is undefined at d={d}, r={r}, k={k}: a denominator factor vanishes")
    left = (P(d, d, k) * P(2 * r, d, k - 1)
            / (Q(d * k) * Q(d * k - d + r) ** 2 * P(r, d, k) * P(r, d, k - 1)))
    right = (P(d, d, k - 1) * P(2 * r, d, k - 1)
             / (Q(d * k - d + r) ** 3 * P(r, d, k - 1) ** 2))
    return left.to_ratfunc() == right.to_ratfunc()
