"""Exact polynomial algebra over Q(u) with a Buchberger engine."""
from .field import ONE, ZERO, FieldElement, NovikovScalar, format_coefficient, to_field
from .groebner import (INFINITE, GroebnerBasis, buchberger, clear_denominators, eliminate,
                       graded_dimensions, ideal_member, ideal_quotient, initial_form,
                       initial_ideal, intersect, limit_at_zero, normal_form, quotient_dimension,
                       s_polynomial, saturate, standard_monomials)
from .polynomial import (GREVLEX, MonomialOrder, PolyRing, Polynomial, binomial, divides,
                         format_monomial)

__all__ = [
    "ONE", "ZERO", "FieldElement", "NovikovScalar", "format_coefficient", "to_field",
    "INFINITE", "GroebnerBasis", "buchberger", "clear_denominators", "eliminate",
    "graded_dimensions", "ideal_member", "ideal_quotient", "initial_form", "initial_ideal",
    "intersect", "limit_at_zero", "normal_form", "quotient_dimension", "s_polynomial",
    "saturate", "standard_monomials", "GREVLEX", "MonomialOrder", "PolyRing", "Polynomial",
    "binomial", "divides", "format_monomial",
]
