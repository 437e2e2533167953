import random
from fractions import Fraction

import pytest

from sns2.compound import det2
from sns2.error import ZeroPolynomialError
from sns2.poly import Monomial, MultiPoly, PolyMatrix
from sns2.polytope import (
    SimplexStatus,
    exact_simplex,
    face_polynomial,
    indefiniteness_witness,
    mixed_vertices,
    mixed_vertices_certificate,
    newton_polytope,
    random_positive_point,
    vertex_terms,
)
from sns2.rules import is_indef2_case

from .fixtures.matrices import variables


def dot(v, point):
    return sum(a * e for a, e in zip(v, point))


def test_simplex_optimum():
    result = exact_simplex([[1, 1]], [1], [1, 2])
    assert result.status is SimplexStatus.OPTIMAL
    assert result.solution == (Fraction(1), Fraction(0))
    assert result.value == 1


def test_simplex_unbounded():
    result = exact_simplex([[1, -1]], [0], [-1, 0])
    assert result.status is SimplexStatus.UNBOUNDED
    assert result.is_feasible


def test_simplex_farkas_certificate():
    a, b = [[1, 1], [1, -1]], [-1, 0]
    result = exact_simplex(a, b)
    assert result.status is SimplexStatus.INFEASIBLE
    y = result.farkas
    assert y is not None
    for j in range(2):
        assert sum(y[i] * a[i][j] for i in range(2)) <= 0
    assert sum(y[i] * b[i] for i in range(2)) > 0


def test_unmixed_vertices():
    x, y = variables(2)
    p = x**2 - 3 * x * y + y**2
    polytope = newton_polytope(p)
    assert polytope.vertices() == [Monomial((2, 0)), Monomial((0, 2))]
    assert polytope.non_vertices() == [Monomial((1, 1))]
    assert polytope.vertex_signs() == {1}
    assert not mixed_vertices(p)
    assert is_indef2_case(p)
    assert vertex_terms(p) == x**2 + y**2
    assert face_polynomial(p, (1, 0)) == x**2
    assert face_polynomial(p, (1, 1)) == p


def test_directions_isolate_vertices():
    x, y, z = variables(3)
    p = x**3 + y**3 + z**3 - x * y * z + x**2 * y
    polytope = newton_polytope(p)
    assert polytope.vertex_count == 3
    for j, direction in enumerate(polytope.directions):
        if direction is None:
            continue
        assert all(
            dot(direction, polytope.points[j]) > dot(direction, point)
            for i, point in enumerate(polytope.points)
            if i != j
        )


def test_generic_three_by_three_has_one_non_vertex():
    polytope = newton_polytope(det2(PolyMatrix.symbolic(3)))
    assert polytope.non_vertices() == [Monomial(1 if k in (0, 4, 8) else 0 for k in range(9))]


def test_zero_polynomial():
    with pytest.raises(ZeroPolynomialError, match="newton_polytope"):
        newton_polytope(MultiPoly.zero(2))
    with pytest.raises(ZeroPolynomialError):
        indefiniteness_witness(MultiPoly.zero(2))


def test_mixed_vertices_certificate():
    x, y = variables(2)
    p = x**2 - y**2 + x * y
    certificate = mixed_vertices_certificate(p).unwrap()
    assert certificate.positive.monomial == (2, 0)
    assert certificate.negative.monomial == (0, 2)
    assert mixed_vertices_certificate(x**2 - x * y + y**2).unwrap_or_none() is None


def test_witness_along_vertex_directions():
    x, y = variables(2)
    p = x**2 - y**2 + x * y
    pair = indefiniteness_witness(p, 100, seed=3).unwrap()
    assert pair.positive_value == p.evaluate(pair.positive) > 0
    assert pair.negative_value == p.evaluate(pair.negative) < 0
    assert all(value > 0 for value in (*pair.positive, *pair.negative))


def test_witness_without_mixed_vertices():
    x, y = variables(2)
    p = x**2 - 3 * x * y + y**2
    pair = indefiniteness_witness(p, 1000, seed=0).unwrap()
    assert p.evaluate(pair.positive) > 0 > p.evaluate(pair.negative)


def test_no_witness_for_definite_polynomials():
    x, y = variables(2)
    assert indefiniteness_witness(x**2 - x * y + y**2, 200).unwrap_or_none() is None
    assert indefiniteness_witness(x + y, 200).unwrap_or_none() is None


def test_random_positive_points_are_seeded():
    first = random_positive_point(random.Random(5), 4)
    assert first == random_positive_point(random.Random(5), 4)
    assert len(first) == 4 and all(value > 0 for value in first)
