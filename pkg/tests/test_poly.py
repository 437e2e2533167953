from fractions import Fraction

import pytest

from sns2.error import ArityMismatchError, DimensionError
from sns2.poly import (
    LaplaceExpansion,
    Monomial,
    MultiPoly,
    PolyMatrix,
    bareiss_determinant,
    determinant,
    graded_lex_key,
    has_mixed_terms,
    substitute_zero_and_resign,
    term_census,
)

from .fixtures.matrices import variables


def test_monomial_basics():
    m = Monomial((2, 0, 1))
    assert m.degree == 3
    assert m.support == frozenset({0, 2})
    assert not m.is_squarefree()
    assert m.to_text() == "X1^2*X3"
    assert m == (2, 0, 1)
    assert Monomial.variable(2, 3) == (0, 1, 0)


def test_monomial_rejects_bad_exponents():
    with pytest.raises(ValueError, match="nonnegative"):
        Monomial((1, -1))
    with pytest.raises(IndexError):
        Monomial.variable(4, 3)


def test_graded_lex_order():
    points = [(0, 2), (1, 1), (2, 0), (0, 1), (0, 0)]
    assert sorted(points, key=graded_lex_key) == [(0, 0), (0, 1), (2, 0), (1, 1), (0, 2)]


def test_arithmetic_and_text():
    x, y = variables(2)
    square = (x + y) ** 2
    assert square.to_text() == "X1^2 + 2*X1*X2 + X2^2"
    assert (x - y) * (x + y) == x**2 - y**2
    assert (x - x).is_zero()
    assert (3 - x).to_text() == "3 - X1"
    assert square.degree == 2 and square.is_homogeneous()
    assert MultiPoly.zero(2).degree == -1
    assert (x + 1).variables() == frozenset({1})


def test_arity_mismatch():
    with pytest.raises(ArityMismatchError, match="2 != 3"):
        MultiPoly.variable(1, 2) + MultiPoly.variable(1, 3)


def test_evaluate_is_exact():
    x, y = variables(2)
    p = x**2 - 3 * x * y + y**2
    assert p.evaluate([Fraction(1, 3), 2]) == Fraction(1, 9) - 2 + 4
    with pytest.raises(DimensionError):
        p.evaluate([1])


def test_compose_and_extend():
    x, y = variables(2)
    u, v, w = variables(3)
    p = x * y - 2 * y
    assert p.compose([u + v, w]) == u * w + v * w - 2 * w
    assert x.extend_arity(3, offset=1) == v


def test_term_census():
    x, y = variables(2)
    p = x**2 - 3 * x * y + y**2
    assert term_census(p) == (2, 1)
    assert has_mixed_terms(p)
    assert not has_mixed_terms(x + y)


def test_substitute_zero_and_resign():
    x, y, z = variables(3)
    p = x * y + y * z - x**2 * z
    assert substitute_zero_and_resign(p, zero_vars=[2]) == -(x**2) * z
    assert substitute_zero_and_resign(p, flip_vars=[1]) == -x * y + y * z - x**2 * z
    with pytest.raises(IndexError):
        substitute_zero_and_resign(p, zero_vars=[4])


def test_rational_terms_clear_denominators():
    p, denominator = MultiPoly.from_rational_terms([(Fraction(1, 2), [1, 0]), (Fraction(1, 3), [0, 1])], 2)
    x, y = variables(2)
    assert denominator == 6
    assert p == 3 * x + 2 * y


def test_from_terms_sums_duplicates():
    p = MultiPoly.from_terms([(1, [1, 0]), (2, [1, 0]), (-1, [0, 1])])
    assert p.to_terms() == [(3, [1, 0]), (-1, [0, 1])]
    with pytest.raises(DimensionError):
        MultiPoly.from_terms([])


@pytest.mark.parametrize(
    ("rows", "expected"),
    [
        ([[2, 1], [1, 2]], 3),
        ([[0, 1], [1, 0]], -1),
        ([[1, 2], [2, 4]], 0),
        ([[1, 5, -2, 7], [0, 2, 3, 1], [0, 0, 3, -4], [0, 0, 0, 4]], 24),
        ([[0, 2, 1], [3, 0, 1], [1, 1, 0]], 5),
    ],
)
def test_bareiss(rows, expected):
    assert bareiss_determinant(rows) == expected


def test_symbolic_determinant():
    m = PolyMatrix.symbolic(2)
    x11, x12, x21, x22 = variables(4)
    assert determinant(m) == x11 * x22 - x12 * x21
    three = determinant(PolyMatrix.symbolic(3))
    assert len(three) == 6
    assert term_census(three) == (3, 3)


def test_laplace_minors():
    expansion = LaplaceExpansion(PolyMatrix.symbolic(3))
    x = variables(9)
    assert expansion.minor([], []) == MultiPoly.constant(1, 9)
    assert expansion.minor([0, 2], [0, 2]) == x[0] * x[8] - x[2] * x[6]
    with pytest.raises(DimensionError, match="as many rows"):
        expansion.minor([0], [0, 1])


def test_matrix_validation():
    x, y = variables(2)
    with pytest.raises(DimensionError, match="square"):
        PolyMatrix([[x, y]])
    with pytest.raises(ArityMismatchError):
        PolyMatrix([[x, MultiPoly.variable(1, 3)], [y, x]])
