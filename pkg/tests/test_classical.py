from fractions import Fraction

import pytest

from qsupercong.classical import (
    ADMISSIBLE_PRIMES,
    CLASSICAL_STATEMENTS,
    RationalPochhammer,
    classical_sum,
    hypergeometric_sum,
    q_to_1_crosscheck,
    verify_classical,
)
from qsupercong.congruence import ParameterError
from qsupercong.exact import ratfunc_eval
from qsupercong.padic import valuation
from qsupercong.theorems import TheoremParams, lhs_sum

HALF, QUARTER = Fraction(1, 2), Fraction(1, 4)


def falling_free_poch(a, k):
    out = Fraction(1)
    for j in range(k):
        out *= a + j
    return out


def test_rational_pochhammer():
    assert RationalPochhammer(HALF, 0).value() == 1
    assert RationalPochhammer(HALF, 3).value() == HALF * Fraction(3, 2) * Fraction(5, 2)
    with pytest.raises(ValueError):
        RationalPochhammer(HALF, -1)


def test_c2_three_terms():
    expected = sum((4 * k + 1) * falling_free_poch(HALF, k) ** 4 / falling_free_poch(1, k) ** 4 for k in range(3))
    assert classical_sum("C2", 5, 1, "short") == expected
    assert expected == 1 + Fraction(5, 16) + Fraction(9 * 81, 4096)


def test_g2_two_terms():
    assert classical_sum("G2", 5, 1, "short") == 1 + 9 * QUARTER**4


def test_single_term():
    assert classical_sum("G2", 3, 1, "short") != 1  # (3p-1)/4 = 2 for p = 3
    assert hypergeometric_sum(4, 1, 0) == 1
    assert hypergeometric_sum(2, 3, 0) == 3


def test_classical_sum_validation():
    with pytest.raises(ParameterError):
        classical_sum("C2", 9)
    with pytest.raises(ParameterError):
        classical_sum("X", 5)
    with pytest.raises(ParameterError):
        classical_sum("G2", 5, 2)


def test_long_c2_example():
    s = classical_sum("C2", 5)
    assert (s - 5).numerator % 5**4 == 0 and valuation(s, 5) >= 0
    assert verify_classical("Long_C2_p4", 5)


def test_cor13_cor15_examples():
    r13 = verify_classical("Cor13", 5)
    r15 = verify_classical("Cor15", 7)
    assert r13 and r15


@pytest.mark.parametrize("statement", CLASSICAL_STATEMENTS)
def test_every_statement_at_admissible_primes(statement):
    for p in ADMISSIBLE_PRIMES[statement]:
        rep = verify_classical(statement, p)
        assert rep, (statement, p, rep)


@pytest.mark.parametrize("statement,p", [("Long_C2_p4", 3), ("VanHamme_G2", 7), ("Swisher", 5),
                                         ("Cor13", 7), ("Cor15", 5), ("Cor16", 3), ("SunZH", 3)])
def test_wrong_class_rejected(statement, p):
    with pytest.raises(ParameterError):
        verify_classical(statement, p)


def test_stronger_moduli_fail():
    """The statements are not vacuous: one power more is false."""
    from qsupercong.padic import residue
    # at p = 7 the 7/6 p^4 B_4 correction is itself divisible by 7^5
    s = classical_sum("C2", 11)
    assert residue(s, 11, 4) == 11
    assert residue(s, 11, 5) != 11


def test_wanghu_needs_bernoulli_term():
    from qsupercong.padic import bernoulli, residue
    p = 11
    s = classical_sum("C2", p)
    assert residue(s, p, 5) != p % p**5
    assert residue(s - p - Fraction(7, 6) * p**4 * bernoulli(p - 3), p, 5) == 0


def test_printed_summands_fail():
    # quarter-Pochhammer in the C2 sum and half-Pochhammer in the G2 sum
    def s(a, c, upper):
        return sum((c * k + 1) * falling_free_poch(a, k) ** 4 / falling_free_poch(1, k) ** 4
                   for k in range(upper + 1))
    assert (s(QUARTER, 4, 3) - 7).numerator % 7**3 != 0
    assert verify_classical("VanHamme_C2", 7)


@pytest.mark.parametrize("n", [5, 13])
@pytest.mark.parametrize("d", [2, 4])
@pytest.mark.parametrize("m", ["short", "long"])
def test_q_to_1(n, d, m):
    p = TheoremParams("theorem1", n, d, 1, m)
    assert q_to_1_crosscheck(p)
    assert ratfunc_eval(lhs_sum(p), 1) == hypergeometric_sum(d, 1, p.M)


def test_q_to_1_examples():
    assert q_to_1_crosscheck(TheoremParams("theorem1", 3, 2, 3))
    with pytest.raises(ParameterError):
        q_to_1_crosscheck(TheoremParams("theorem1", 9, 4, 1))
