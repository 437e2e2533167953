from sns2.poly.determinant import LaplaceExpansion, bareiss_determinant, determinant
from sns2.poly.matrix import MatrixFile, PolyMatrix
from sns2.poly.monomial import Exponents, Monomial, graded_lex_key
from sns2.poly.multipoly import (
    MultiPoly,
    Rational,
    add,
    evaluate,
    has_mixed_terms,
    mul,
    rationals_to_poly,
    substitute_zero_and_resign,
    term_census,
)

__all__ = (
    "Exponents",
    "LaplaceExpansion",
    "MatrixFile",
    "Monomial",
    "MultiPoly",
    "PolyMatrix",
    "Rational",
    "add",
    "bareiss_determinant",
    "determinant",
    "evaluate",
    "graded_lex_key",
    "has_mixed_terms",
    "mul",
    "rationals_to_poly",
    "substitute_zero_and_resign",
    "term_census",
)
