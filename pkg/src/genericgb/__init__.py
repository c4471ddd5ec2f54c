"""Grevlex Gröbner bases and initial ideals of generic ideals, with exact arithmetic."""

from .coeff import RATIONALS, CoefficientDomain, PrimeField, Scalar
from .poly import Monomial, Polynomial, grevlex_cmp
from .groebner import Ideal, GroebnerBasis, buchberger, initial_ideal, normal_form, s_polynomial
from .monideal import MonomialIdeal, is_revlex, is_weakly_revlex, minimalize, staircase

__all__ = [
    "RATIONALS", "CoefficientDomain", "PrimeField", "Scalar",
    "Monomial", "Polynomial", "grevlex_cmp",
    "Ideal", "GroebnerBasis", "buchberger", "initial_ideal", "normal_form", "s_polynomial",
    "MonomialIdeal", "is_revlex", "is_weakly_revlex", "minimalize", "staircase",
]
