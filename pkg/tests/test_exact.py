import pickle
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from qsupercong.exact import MINUS_INFINITY, PoleError, Poly, RatFunc, poly_divrem, poly_gcd, ratfunc_eval
from qsupercong.exact import _python_backend as pyb
from qsupercong.qobjects import q_integer

q = Poly.q()

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.lists(small, max_size=6).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def P(*c):
    return Poly(list(c))


class TestPoly:
    def test_zero_degree_is_marker(self):
        assert Poly.zero().degree is MINUS_INFINITY
        assert Poly.zero().degree < 0
        assert not isinstance(Poly.zero().degree, int)

    def test_trailing_zeros_dropped(self):
        assert Poly([1, 2, 0, 0]).coefficients() == [1, 2]
        assert Poly([0, 0]).is_zero()

    @pytest.mark.parametrize("a, b, quo, rem", [
        (q**2 - 1, q - 1, q + 1, Poly.zero()),
        (q, q**2, Poly.zero(), q),
        (q**3 + 2 * q + 1, q + 1, q**2 - q + 3, Poly.constant(-2)),
    ])
    def test_divrem_examples(self, a, b, quo, rem):
        assert poly_divrem(a, b) == (quo, rem)

    def test_divrem_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            poly_divrem(q, Poly.zero())

    @pytest.mark.parametrize("a, b, g", [
        (q**2 - 1, q - 1, q - 1),
        (q**2 + 1, q + 1, Poly.one()),
        (q**6 - 1, q**4 - 1, q**2 - 1),
    ])
    def test_gcd_examples(self, a, b, g):
        assert poly_gcd(a, b) == g

    def test_gcd_zero_zero(self):
        with pytest.raises(ValueError):
            poly_gcd(Poly.zero(), Poly.zero())

    def test_str(self):
        assert str(1 - q + q**2) == "1 + -q + q^2"

    def test_pickle(self):
        p = P(1, Fraction(2, 3), -4)
        assert pickle.loads(pickle.dumps(p)) == p

    @given(polys, polys, polys)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == Poly.zero()

    @given(polys, nonzero_polys)
    def test_divrem_recomposes(self, a, b):
        quo, rem = poly_divrem(a, b)
        assert quo * b + rem == a
        assert rem.degree < b.degree

    @given(nonzero_polys, nonzero_polys, nonzero_polys)
    def test_gcd_properties(self, a, b, c):
        g = poly_gcd(a * c, b * c)
        assert g.leading_coefficient() == 1
        assert g.divides(a * c) and g.divides(b * c)
        assert c.monic().divides(g)

    @given(polys, polys)
    def test_python_backend_agrees(self, a, b):
        ra = pyb.from_coeffs(a.coefficients())
        rb = pyb.from_coeffs(b.coefficients())
        assert pyb.coeffs(pyb.mul(ra, rb)) == (a * b).coefficients()
        assert pyb.coeffs(pyb.add(ra, rb)) == (a + b).coefficients()
        if not b.is_zero():
            quo, rem = pyb.divrem(ra, rb)
            assert (pyb.coeffs(quo), pyb.coeffs(rem)) == tuple(x.coefficients() for x in a.divrem(b))
        if not (a.is_zero() and b.is_zero()):
            assert pyb.coeffs(pyb.gcd(ra, rb)) == poly_gcd(a, b).coefficients()


rats = st.tuples(polys, nonzero_polys).map(lambda t: RatFunc(*t))


class TestRatFunc:
    def test_canonical(self):
        f = RatFunc(q**2 - 1, 2 * q - 2)
        assert f.num == (q + 1) * Fraction(1, 2) and f.den == Poly.one()
        g = RatFunc(q, 3 * q**2 + 3)
        assert g.den.leading_coefficient() == 1

    def test_examples(self):
        assert RatFunc(1, 1 - q) + RatFunc(-q, 1 - q) == RatFunc.one()
        assert RatFunc(q**2 - 1, q - 1) == RatFunc(q + 1)
        assert q_integer(5) / q_integer(2) ** 4 * q_integer(2) ** 4 == q_integer(5)

    def test_eval(self):
        assert ratfunc_eval(q_integer(4), 1) == 4
        assert ratfunc_eval(RatFunc(1 - q**3, 1 - q), 1) == 3
        with pytest.raises(PoleError):
            ratfunc_eval(RatFunc(1, 1 - q), 1)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            RatFunc(q) / RatFunc.zero()

    def test_poly_roundtrip(self):
        p = P(1, -2, 3)
        assert RatFunc(p).to_poly() == p

    @given(rats, rats, rats)
    def test_field_laws(self, a, b, c):
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * a.inverse() == RatFunc.one()

    @given(rats)
    def test_canonical_is_idempotent(self, a):
        again = RatFunc(a.num, a.den)
        assert again.num == a.num and again.den == a.den
        assert poly_gcd(a.num, a.den) == Poly.one() or a.is_zero()

    @given(rats, small)
    def test_eval_is_homomorphism(self, a, x):
        assume(not a.den(x) == 0)
        b = a * a + 1
        assert ratfunc_eval(b, x) == ratfunc_eval(a, x) ** 2 + 1


def test_pure_backend_end_to_end():
    import os
    import subprocess
    import sys
    code = ("from qsupercong.exact import BACKEND\n"
            "from qsupercong.theorems import TheoremParams, verify_theorem\n"
            "assert BACKEND == 'python'\n"
            "assert verify_theorem(TheoremParams('theorem1', 5, 2, 1, 'long'))\n"
            "assert not verify_theorem(TheoremParams('theorem2', 3, 4, 1), phi_power=5)\n")
    env = {**os.environ, "QSC_POLY_BACKEND": "python"}
    subprocess.run([sys.executable, "-c", code], env=env, check=True)
