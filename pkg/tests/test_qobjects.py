from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qsupercong.exact import Poly, RatFunc
from qsupercong.qobjects import (
    CycloProduct,
    Modulus,
    QPochhammerSpec,
    cyclotomic,
    divisors,
    modulus_build,
    phi_only_modulus,
    q_integer,
    q_pochhammer,
    qpoch,
    sum_products,
    totient,
)

q = Poly.q()


def test_cyclotomic_examples():
    assert cyclotomic(1) == q - 1
    assert cyclotomic(4) == q**2 + 1
    assert cyclotomic(6) == q**2 - q + 1
    with pytest.raises(ValueError):
        cyclotomic(0)


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_invariants(n):
    phi = cyclotomic(n)
    assert phi.degree == totient(n)
    assert all(c.denominator == 1 for c in phi.coefficients())
    prod = Poly.one()
    for t in divisors(n):
        prod = prod * cyclotomic(t)
    assert prod == Poly.monomial(n) - 1


def test_q_integer_examples():
    assert q_integer(0) == RatFunc.zero()
    assert q_integer(4) == RatFunc(1 + q + q**2 + q**3)
    assert q_integer(-2) == RatFunc(-(1 + q), q**2)


@given(st.integers(-15, 15))
def test_q_integer_definition(m):
    assert q_integer(m) == RatFunc(1 - Poly.monomial(m) if m >= 0 else Poly.monomial(-m) - 1,
                                   (1 - q) if m >= 0 else (1 - q) * Poly.monomial(-m))


def test_pochhammer_examples():
    assert q_pochhammer(QPochhammerSpec(1, 2, 2)) == RatFunc((1 - q) * (1 - q**3))
    assert q_pochhammer(QPochhammerSpec(5, 4, 0)) == RatFunc.one()
    assert q_pochhammer(QPochhammerSpec(-3, 4, 1)) == RatFunc(q**3 - 1, q**3)


def test_pochhammer_spec_validation():
    with pytest.raises(ValueError):
        QPochhammerSpec(1, 0, 2)
    with pytest.raises(ValueError):
        QPochhammerSpec(1, 2, -1)


def test_pochhammer_general_coefficient():
    # (1 - c/q)(1 - c q)
    c = Fraction(2, 3)
    assert q_pochhammer(a=-1, d=2, k=2, c=c) == RatFunc((q - c) * (1 - c * q), q)


@given(st.integers(-8, 8), st.integers(1, 5), st.integers(0, 6))
def test_cyclo_product_matches_direct(a, d, k):
    assert CycloProduct.poch(a, d, k).to_ratfunc() == qpoch(a, d, k)


@given(st.integers(-12, 12), st.integers(-12, 12))
def test_cyclo_product_arith(m1, m2):
    x, y = CycloProduct.q_int(m1), CycloProduct.q_int(m2)
    assert (x * y).to_ratfunc() == q_integer(m1) * q_integer(m2)
    if m2:
        assert (x / y).to_ratfunc() == q_integer(m1) / q_integer(m2)
    assert sum_products([x, -y, x.times_q(3)]) == q_integer(m1) - q_integer(m2) + q_integer(m1) * RatFunc.q_power(3)


def test_modulus_examples():
    m = modulus_build(3, 4)
    assert m.factors == ((3, 5),)
    assert m.expanded == (1 + q + q**2) ** 5
    m1 = modulus_build(1, 1)
    assert m1.factors == ((1, 1),) and m1.expanded == q - 1
    assert modulus_build(6, 3).factors == ((2, 1), (3, 1), (6, 4))
    assert phi_only_modulus(5, 4).expanded == cyclotomic(5) ** 4
    assert phi_only_modulus(2, 1).expanded == q + 1
    assert phi_only_modulus(9, 5).expanded.degree == 30


@pytest.mark.parametrize("n", range(1, 31))
def test_modulus_build_expanded(n):
    m = modulus_build(n, 4)
    if n == 1:
        expected = cyclotomic(1) ** 4
    else:
        expected = q_integer(n).to_poly() * cyclotomic(n) ** 4
    assert m.expanded == expected
    assert len({t for t, _ in m.factors}) == len(m.factors)


def test_modulus_merges_factors():
    m = Modulus(((3, 1), (3, 2), (2, 1)))
    assert m.factors == ((2, 1), (3, 3))
