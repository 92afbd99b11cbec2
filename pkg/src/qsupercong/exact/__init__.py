"""Exact arithmetic substrate: rationals, polynomials in q, rational functions."""

from fractions import Fraction as ExactRational

from .poly import BACKEND, MINUS_INFINITY, Poly, poly_divrem, poly_gcd
from .ratfunc import PoleError, RatFunc, ratfunc_eval

__all__ = [
    "BACKEND",
    "ExactRational",
    "MINUS_INFINITY",
    "PoleError",
    "Poly",
    "RatFunc",
    "poly_divrem",
    "poly_gcd",
    "ratfunc_eval",
]
