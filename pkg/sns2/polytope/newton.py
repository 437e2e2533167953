import dataclasses
import math
import typing
from fractions import Fraction

from fntypes.option import Nothing, Option, Some

from sns2.error import DimensionError, ZeroPolynomialError
from sns2.modules import logger
from sns2.poly.monomial import Exponents, Monomial
from sns2.poly.multipoly import MultiPoly, Rational
from sns2.polytope.simplex import exact_simplex

type Direction = tuple[int, ...]


@dataclasses.dataclass(frozen=True, slots=True)
class NewtonPolytope:
    """Exponent vectors of a polynomial with their vertex status.

    Every vertex carries an integer direction `v` that it alone maximizes:
    `v . points[j] > v . points[i]` for all `i != j`.
    """

    arity: int
    points: tuple[Exponents, ...]
    coefficients: tuple[int, ...]
    vertex_flags: tuple[bool, ...]
    directions: tuple[Direction | None, ...]

    def __repr__(self) -> str:
        return "<NewtonPolytope: arity={}, points={}, vertices={}>".format(
            self.arity,
            len(self.points),
            self.vertex_count,
        )

    @property
    def vertex_count(self) -> int:
        return sum(self.vertex_flags)

    def vertices(self) -> list[Monomial]:
        return [Monomial(p) for p, flag in zip(self.points, self.vertex_flags) if flag]

    def non_vertices(self) -> list[Monomial]:
        return [Monomial(p) for p, flag in zip(self.points, self.vertex_flags) if not flag]

    def vertex_signs(self) -> set[int]:
        return {1 if c > 0 else -1 for c, flag in zip(self.coefficients, self.vertex_flags) if flag}


def _dot(v: typing.Sequence[Rational], point: Exponents) -> Rational:
    return sum(a * e for a, e in zip(v, point) if e)


def _integral(direction: list[Fraction]) -> Direction:
    scale = math.lcm(*(d.denominator for d in direction)) if direction else 1
    return tuple(int(d * scale) for d in direction)


def separating_direction(points: typing.Sequence[Exponents], index: int) -> Direction | None:
    """Integer direction isolating `points[index]`, or `None` if the point is
    a convex combination of the others.

    Exponents are nonnegative, so only points whose support lies inside the
    support of the target can take part in a convex combination equal to it.
    """
    target = points[index]
    support = [k for k, e in enumerate(target) if e]
    outside = [k for k, e in enumerate(target) if not e]
    candidates = [i for i, point in enumerate(points) if i != index and not any(point[k] for k in outside)]
    weights = [Fraction(0)] * len(target)
    if candidates:
        rows = [[points[i][k] for i in candidates] for k in support]
        rows.append([1] * len(candidates))
        result = exact_simplex(rows, [target[k] for k in support] + [1])
        if result.is_feasible:
            return None
        assert result.farkas is not None
        for k, y in zip(support, result.farkas):
            weights[k] = y
    # Points with exponents outside the support are pushed down by a large enough penalty.
    target_value = _dot(weights, target)
    skipped = set(candidates) | {index}
    excess = max(
        (_dot(weights, point) - target_value for i, point in enumerate(points) if i not in skipped),
        default=Fraction(0),
    )
    penalty = max(Fraction(excess), Fraction(0)) + 1
    for k in outside:
        weights[k] = -penalty
    return _integral(weights)


def newton_polytope(p: MultiPoly) -> NewtonPolytope:
    if p.is_zero():
        raise ZeroPolynomialError("newton_polytope")
    terms = p.sorted_terms()
    points = tuple(tuple(monomial) for monomial, _ in terms)
    directions = tuple(separating_direction(points, j) for j in range(len(points)))
    logger.debug("newton_polytope: {} points, {} vertices", len(points), sum(d is not None for d in directions))
    return NewtonPolytope(
        arity=p.arity,
        points=points,
        coefficients=tuple(c for _, c in terms),
        vertex_flags=tuple(d is not None for d in directions),
        directions=directions,
    )


def face_polynomial(p: MultiPoly, direction: typing.Sequence[Rational]) -> MultiPoly:
    """Terms whose exponent vectors maximize `direction . alpha`."""
    if p.is_zero():
        raise ZeroPolynomialError("face_polynomial")
    if len(direction) != p.arity:
        raise DimensionError(f"Direction has {len(direction)} coordinates, polynomial has arity {p.arity}.")
    best = max(_dot(direction, key) for key in p.terms)
    return p.filter_terms(lambda monomial, _: _dot(direction, monomial) == best)


def vertex_terms(p: MultiPoly, polytope: NewtonPolytope | None = None) -> MultiPoly:
    polytope = polytope or newton_polytope(p)
    vertices = {point for point, flag in zip(polytope.points, polytope.vertex_flags) if flag}
    return p.filter_terms(lambda monomial, _: tuple(monomial) in vertices)


def mixed_vertices(p: MultiPoly, polytope: NewtonPolytope | None = None) -> bool:
    polytope = polytope or newton_polytope(p)
    return len(polytope.vertex_signs()) == 2


@dataclasses.dataclass(frozen=True, slots=True)
class VertexTerm:
    monomial: Monomial
    coefficient: int
    direction: Direction


@dataclasses.dataclass(frozen=True, slots=True)
class MixedVerticesCertificate:
    """A positive and a negative vertex term; either dominates along its own direction."""

    positive: VertexTerm
    negative: VertexTerm


def mixed_vertices_certificate(
    p: MultiPoly,
    polytope: NewtonPolytope | None = None,
) -> Option[MixedVerticesCertificate]:
    polytope = polytope or newton_polytope(p)
    found: dict[int, VertexTerm] = {}
    for point, coefficient, direction in zip(polytope.points, polytope.coefficients, polytope.directions):
        if direction is None:
            continue
        found.setdefault(1 if coefficient > 0 else -1, VertexTerm(Monomial(point), coefficient, direction))
    if len(found) < 2:
        return Nothing()
    return Some(MixedVerticesCertificate(positive=found[1], negative=found[-1]))


__all__ = (
    "Direction",
    "MixedVerticesCertificate",
    "NewtonPolytope",
    "VertexTerm",
    "face_polynomial",
    "mixed_vertices",
    "mixed_vertices_certificate",
    "newton_polytope",
    "separating_direction",
    "vertex_terms",
)
