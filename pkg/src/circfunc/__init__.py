"""Exact circular integral functional on Q[x, y] and super Catalan numbers."""

from .coeff import PrimeField, PrimeFieldElement, Rational, rational_mod_p
from .expr import format_poly, parse_poly
from .functional import UNIT_CIRCLE, CircleSpec, psi, psi_general, psi_monomial, psi_via_canonical
from .poly import CIRCLE, X, Y, AffinePoint, Polynomial, Rotation, act, act_point, evaluate, rotation_matrix
from .reduce import CanonicalForm, canonicalize, is_ideal_member, vanishes_on_sample
from .supercat import catalan, interpret, omega, super_catalan

__all__ = [
    "AffinePoint", "CIRCLE", "CanonicalForm", "CircleSpec", "Polynomial", "PrimeField",
    "PrimeFieldElement", "Rational", "Rotation", "UNIT_CIRCLE", "X", "Y", "act", "act_point",
    "canonicalize", "catalan", "evaluate", "format_poly", "interpret", "is_ideal_member",
    "omega", "parse_poly", "psi", "psi_general", "psi_monomial", "psi_via_canonical",
    "rational_mod_p", "rotation_matrix", "super_catalan", "vanishes_on_sample",
]
