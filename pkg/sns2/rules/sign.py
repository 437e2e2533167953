import typing

from fntypes.option import Some

from sns2.poly.multipoly import MultiPoly, term_census
from sns2.polytope.newton import mixed_vertices
from sns2.polytope.witness import indefiniteness_witness
from sns2.rules.verdict import SignClass3

EXPRESSION_WITNESS_BUDGET: typing.Final[int] = 256


def sign_of_expression(e: MultiPoly, *, budget: int = EXPRESSION_WITNESS_BUDGET, seed: int = 0) -> SignClass3:
    """Sign of `e` on the open positive orthant.

    Single-sign polynomials are definite; mixed vertex terms or an exact pair of
    opposite-sign evaluations make `e` indefinite. Anything else is `UNKNOWN`.
    """
    if e.is_zero():
        return SignClass3.ZERO
    positive, negative = term_census(e)
    if not negative:
        return SignClass3.POSITIVE
    if not positive:
        return SignClass3.NEGATIVE
    if mixed_vertices(e):
        return SignClass3.INDEFINITE
    match indefiniteness_witness(e, budget, seed, curve=False):
        case Some(_):
            return SignClass3.INDEFINITE
    return SignClass3.UNKNOWN


def sign_of_product(*factors: MultiPoly, budget: int = EXPRESSION_WITNESS_BUDGET, seed: int = 0) -> SignClass3:
    """Sign of a product from the signs of its factors; the expanded product is classified
    only when two or more factors are neither definite nor zero."""
    signs = [sign_of_expression(f, budget=budget, seed=seed) for f in factors]
    if SignClass3.ZERO in signs:
        return SignClass3.ZERO
    loose = [s for s in signs if not s.is_strict]
    if not loose:
        result = SignClass3.POSITIVE
        for s in signs:
            result = result * s
        return result
    if len(loose) == 1:
        # Definite factors do not change the class of the single loose factor.
        return loose[0]
    product = factors[0]
    for factor in factors[1:]:
        product = product * factor
    return sign_of_expression(product, budget=budget, seed=seed)


__all__ = ("EXPRESSION_WITNESS_BUDGET", "sign_of_expression", "sign_of_product")
