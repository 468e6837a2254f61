"""Exact computations in Z3-graded cubic algebras and their Z6-graded extensions."""

from .scalars import I, J, J2, ONE, Q, ZERO, Cyclo, parse_scalar, zeta_power
from .poly import Gen, Poly, parse_poly, parse_word
from .presentation import AlgebraType, Presentation, make_presentation
from .rewrite import multiply, normalize, six_sum
from .oracle import ideal_contains, quotient_basis
from .hilbert import hilbert_coeffs, lambda_closed_form

__version__ = "0.1.0"

__all__ = [
    "Cyclo", "ZERO", "ONE", "J", "J2", "Q", "I", "parse_scalar", "zeta_power",
    "Gen", "Poly", "parse_poly", "parse_word",
    "AlgebraType", "Presentation", "make_presentation",
    "normalize", "multiply", "six_sum",
    "quotient_basis", "ideal_contains",
    "hilbert_coeffs", "lambda_closed_form",
]
