from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qsupercong.congruence import (
    CoprimalityError,
    ParameterError,
    congruent,
    lemma_coprimality_gk,
    lemma_coprimality_prefactor,
    lemma_coprimality_qint,
)
from qsupercong.exact import Poly, RatFunc
from qsupercong.qobjects import modulus_build, phi_only_modulus
from qsupercong.theorems import enumerate_valid_params

q = Poly.q()
PHI3 = phi_only_modulus(3, 1)


def test_congruent_examples():
    assert congruent(RatFunc(q**3), RatFunc.one(), PHI3).holds
    rep = congruent(RatFunc(q), RatFunc.one(), PHI3)
    assert not rep.holds and rep.residue_witness == q - 1 and rep.witness_degree == 1
    with pytest.raises(CoprimalityError) as exc:
        congruent(RatFunc(1, 1 - q**3), RatFunc(q), PHI3)
    assert exc.value.common.degree >= 1


def test_non_strict_flags_coprimality():
    rep = congruent(RatFunc(1, 1 - q**3), RatFunc(q), PHI3, strict=False)
    assert not rep.coprimality_ok and not rep


def test_holding_report_has_zero_witness():
    rep = congruent(RatFunc(q**6), RatFunc(1), PHI3)
    assert rep.holds and rep.residue_witness.is_zero() and rep.witness_degree is None


coeffs = st.lists(st.integers(-3, 3), max_size=8).map(Poly)
# denominators built from factors coprime to Phi_5
units = st.lists(st.sampled_from([q + 2, q - 3, q**2 + 2, 2 * q + 1]), max_size=2).map(
    lambda fs: Poly.one() if not fs else fs[0] * (fs[1] if len(fs) > 1 else 1))
fracs = st.tuples(coeffs, units).map(lambda t: RatFunc(*t))
M5 = phi_only_modulus(5, 2)


@given(fracs, fracs, fracs)
def test_congruence_is_equivalence(a, b, c):
    assert congruent(a, a, M5).holds
    ab, ba = congruent(a, b, M5).holds, congruent(b, a, M5).holds
    assert ab == ba
    if ab and congruent(b, c, M5).holds:
        assert congruent(a, c, M5).holds


@given(fracs, fracs, st.integers(-3, 3))
def test_congruence_compatibility(a, c, k):
    shift = RatFunc(M5.expanded) * k
    b, e = a + shift, c + shift * RatFunc(q)
    assert congruent(a, b, M5).holds and congruent(c, e, M5).holds
    assert congruent(a + c, b + e, M5).holds
    assert congruent(a * c, b * e, M5).holds


def test_prefactor_examples():
    assert lemma_coprimality_prefactor(3, 2, 1).coprime
    assert lemma_coprimality_prefactor(5, 4, 1).coprime
    assert lemma_coprimality_prefactor(5, 4, 5).coprime
    with pytest.raises(ParameterError):
        lemma_coprimality_prefactor(4, 2, 1)


def test_gk_examples():
    assert lemma_coprimality_gk(3, 2, 1, 1, "n").coprime
    assert lemma_coprimality_gk(9, 4, 1, 2, "n").coprime
    assert lemma_coprimality_gk(3, 4, 1, 2, "dn").coprime
    with pytest.raises(ParameterError):
        lemma_coprimality_gk(3, 2, 1, 2, "n")


def test_qint_examples():
    assert lemma_coprimality_qint(5, 2, 1, "n").coprime
    assert lemma_coprimality_qint(5, 2, 2, "n").coprime
    assert lemma_coprimality_qint(3, 4, 2, "dn").coprime
    with pytest.raises(ParameterError):
        lemma_coprimality_qint(5, 2, 5, "n")


@pytest.mark.parametrize("family,variant", [("theorem1", "n"), ("theorem2", "dn")])
def test_prefactor_and_qint_grids(family, variant):
    for p in enumerate_valid_params(family, 21, 6, n_min=3):
        assert lemma_coprimality_prefactor(p.n, p.d, p.r, variant).coprime, p
        for k in range(1, p.n):
            assert lemma_coprimality_qint(p.n, p.d, k, variant).coprime, (p, k)


@pytest.mark.parametrize("family,variant", [("theorem1", "n"), ("theorem2", "dn")])
def test_gk_prime_n_grid(family, variant):
    """For prime n the claim holds on the full grid; composite n is covered in the acceptance module."""
    from qsupercong.padic import is_prime
    for p in enumerate_valid_params(family, 21, 6, n_min=3):
        if not is_prime(p.n):
            continue
        for k in range(1, p.K + 1):
            assert lemma_coprimality_gk(p.n, p.d, p.r, k, variant).coprime, (p, k)


def test_gk_composite_counterexample():
    # Phi_3^2 in the denominator against a single Phi_3 from 1 - q^9
    rep = lemma_coprimality_gk(9, 2, 1, 3, "n")
    assert not rep.coprime
    assert rep.gcd_with_modulus == q**2 + q + 1
    assert rep.coprime_to_phi_n


def test_weaker_moduli_follow():
    a = RatFunc(Poly.monomial(9) * 2 + 3)
    b = a + RatFunc(modulus_build(3, 4).expanded * (q + Fraction(1, 2)))
    for m in (modulus_build(3, 4), modulus_build(3, 3), phi_only_modulus(3, 4)):
        assert congruent(a, b, m).holds
    assert not congruent(a, b + 1, modulus_build(3, 4)).holds
