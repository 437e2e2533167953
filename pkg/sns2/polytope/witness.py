import dataclasses
import random
import typing
from fractions import Fraction

from fntypes.option import Nothing, Option, Some

from sns2.config import DEFAULT_WITNESS_BUDGET
from sns2.error import ZeroPolynomialError
from sns2.modules import logger
from sns2.poly.multipoly import MultiPoly, has_mixed_terms
from sns2.polytope.newton import Direction, NewtonPolytope, mixed_vertices_certificate, newton_polytope

type Point = tuple[Fraction, ...]

CURVE_STEPS: typing.Final[int] = 48
SAMPLE_SPREAD: typing.Final[int] = 6


@dataclasses.dataclass(frozen=True, slots=True)
class WitnessPair:
    """Two positive rational points where a polynomial takes opposite signs."""

    positive: Point
    negative: Point
    positive_value: Fraction
    negative_value: Fraction

    def to_strings(self) -> dict[str, list[str]]:
        return {
            "positive": [str(x) for x in self.positive],
            "negative": [str(x) for x in self.negative],
        }


def _curve_point(direction: Direction, t: Fraction) -> Point:
    return tuple(t**v for v in direction)


def _search_curve(p: MultiPoly, direction: Direction, sign: int, budget: int) -> tuple[Point | None, int]:
    """Walk `X_i = t^{v_i}` with `t = 2, 4, 8, ...` until the dominant vertex term shows its sign."""
    t = Fraction(2)
    for step in range(min(budget, CURVE_STEPS)):
        point = _curve_point(direction, t)
        if p.evaluate(point) * sign > 0:
            return point, step + 1
        t *= 2
    return None, min(budget, CURVE_STEPS)


def random_positive_point(rng: random.Random, arity: int) -> Point:
    return tuple(
        Fraction(rng.randint(1, 9), rng.randint(1, 9)) * Fraction(2) ** rng.randint(-SAMPLE_SPREAD, SAMPLE_SPREAD)
        for _ in range(arity)
    )


def indefiniteness_witness(
    p: MultiPoly,
    budget: int = DEFAULT_WITNESS_BUDGET,
    seed: int = 0,
    *,
    polytope: NewtonPolytope | None = None,
    curve: bool = True,
) -> Option[WitnessPair]:
    """Search for positive points of opposite sign; every claimed sign is an exact evaluation.

    Mixed vertices are tried first along their separating directions (unless
    `curve` is off), then seeded random sampling spends the remaining budget.
    `Nothing()` proves nothing about definiteness.
    """
    if p.is_zero():
        raise ZeroPolynomialError("indefiniteness_witness")
    if budget <= 0 or not has_mixed_terms(p):
        return Nothing()
    found: dict[int, tuple[Point, Fraction]] = {}
    remaining = budget

    def record(point: Point) -> None:
        value = p.evaluate(point)
        if value:
            found.setdefault(1 if value > 0 else -1, (point, value))

    match mixed_vertices_certificate(p, polytope or newton_polytope(p)) if curve else Nothing():
        case Some(mixed):
            for sign, vertex in ((1, mixed.positive), (-1, mixed.negative)):
                point, used = _search_curve(p, vertex.direction, sign, remaining)
                remaining -= used
                if point is not None:
                    record(point)

    rng = random.Random(seed)
    if remaining > 0 and len(found) < 2:
        record((Fraction(1),) * p.arity)
        remaining -= 1
    while remaining > 0 and len(found) < 2:
        record(random_positive_point(rng, p.arity))
        remaining -= 1

    if len(found) < 2:
        logger.debug("indefiniteness_witness: nothing found within budget {}", budget)
        return Nothing()
    (positive, positive_value), (negative, negative_value) = found[1], found[-1]
    return Some(
        WitnessPair(
            positive=positive,
            negative=negative,
            positive_value=positive_value,
            negative_value=negative_value,
        )
    )


__all__ = ("CURVE_STEPS", "Point", "WitnessPair", "indefiniteness_witness", "random_positive_point")
