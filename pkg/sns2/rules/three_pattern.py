import itertools
import typing

from sns2.error import DimensionError
from sns2.modules import logger
from sns2.poly.monomial import Monomial
from sns2.poly.multipoly import MultiPoly, term_census
from sns2.rules.abc import ABCRule
from sns2.rules.context import ContextLike, PatternContext, as_context
from sns2.rules.verdict import Claim, Classification2, Evidence, Verdict, Witnesses
from sns2.signpat.digraph import Cycle

THREE_PATTERN_STATEMENT = "det2 of a 3-pattern is zero, definite or indefinite according to its short cycles"

type Found = tuple[Cycle, ...] | None


def loop_sign(loop: Cycle) -> int:
    """Sign of the diagonal entry; a positive loop is odd."""
    return loop.arcs[0].sign


class CycleStructure(ABCRule):
    """A named configuration of cycles; `find` returns the cycles that realise it."""

    key: typing.ClassVar[str]

    def __repr__(self) -> str:
        return "<{}: {}>".format(self.__class__.__name__, self.key)

    def find(self, ctx: PatternContext) -> Found:
        raise NotImplementedError

    def check(self, ctx: PatternContext) -> bool:
        return self.find(ctx) is not None


class TwoLoops(CycleStructure):
    key = "two_loops"

    def find(self, ctx: PatternContext) -> Found:
        return tuple(ctx.loops[:2]) if len(ctx.loops) >= 2 else None


class LoopOnTwoCycle(CycleStructure):
    key = "loop_on_two_cycle"

    def find(self, ctx: PatternContext) -> Found:
        return next(iter(ctx.coincident_pairs), None)


class Triangle(CycleStructure):
    key = "triangle"

    def find(self, ctx: PatternContext) -> Found:
        return (ctx.triangles[0],) if ctx.triangles else None


class OppositeLoops(CycleStructure):
    key = "opposite_loops"

    def find(self, ctx: PatternContext) -> Found:
        return next(((a, b) for a, b in itertools.combinations(ctx.loops, 2) if a.parity != b.parity), None)


class LoopsWithEvenTwoCycle(CycleStructure):
    key = "loops_with_even_two_cycle"

    def find(self, ctx: PatternContext) -> Found:
        if len(ctx.loops) < 2:
            return None
        even = next((c for c in ctx.two_cycles if c.parity == 1), None)
        return None if even is None else (*ctx.loops[:2], even)


class OppositeTwoCyclesOnLoop(CycleStructure):
    key = "opposite_two_cycles_on_loop"

    def find(self, ctx: PatternContext) -> Found:
        for loop in ctx.loops:
            vertex = loop.vertices[0]
            through = [c for c in ctx.two_cycles if vertex in c.vertex_set]
            for a, b in itertools.combinations(through, 2):
                if a.parity != b.parity:
                    return loop, a, b
        return None


class LoopsWithTriangleSameParity(CycleStructure):
    key = "loops_with_triangle_same_parity"

    def find(self, ctx: PatternContext) -> Found:
        for a, b in itertools.combinations(ctx.loops, 2):
            for triangle in ctx.triangles:
                if a.parity == b.parity == triangle.parity:
                    return a, b, triangle
        return None


class LoopTwoCycleAgainstTriangle(CycleStructure):
    """Loop on a 2-cycle, plus a triangle whose parity differs from that of their union."""

    key = "loop_two_cycle_against_triangle"

    def find(self, ctx: PatternContext) -> Found:
        for loop, two_cycle in ctx.coincident_pairs:
            for triangle in ctx.triangles:
                if triangle.parity != loop.parity * two_cycle.parity:
                    return loop, two_cycle, triangle
        return None


class OppositeTriangles(CycleStructure):
    key = "opposite_triangles"

    def find(self, ctx: PatternContext) -> Found:
        return next(
            ((a, b) for a, b in itertools.combinations(ctx.triangles, 2) if a.parity != b.parity),
            None,
        )


NONZERO_STRUCTURES: typing.Final[tuple[CycleStructure, ...]] = (TwoLoops(), LoopOnTwoCycle(), Triangle())
INDEFINITE_STRUCTURES: typing.Final[tuple[CycleStructure, ...]] = (
    OppositeLoops(),
    LoopsWithEvenTwoCycle(),
    OppositeTwoCyclesOnLoop(),
    LoopsWithTriangleSameParity(),
    LoopTwoCycleAgainstTriangle(),
    OppositeTriangles(),
)


def _monomial(ctx: PatternContext, cycles: typing.Iterable[Cycle]) -> Monomial:
    """Product of the arc variables; a cycle listed twice counts twice."""
    exponents = [0] * ctx.pattern.nonzero_count()
    for cycle in cycles:
        for arc in cycle.arcs:
            exponents[ctx.pattern.variable_index(*arc.entry) - 1] += 1
    return Monomial(exponents)


def three_pattern_vertex_terms(pattern: ContextLike) -> list[tuple[Monomial, int]]:
    """Vertex terms of `det2` of a 3-pattern, each with coefficient `+-1`, from the cycles alone.

    Each ordered pair of loops `(i, j)` gives `x_ii^2 x_jj` with the sign of loop `j`;
    a loop on a 2-cycle and a triangle each give their arc product with sign `par`
    (even is `+1`). The only other term, `2 x_11 x_22 x_33`, is not a vertex.
    """
    ctx = as_context(pattern)
    if ctx.n != 3:
        raise DimensionError(f"Expected a 3-pattern, got n = {ctx.n}.")
    terms: list[tuple[Monomial, int]] = [
        (_monomial(ctx, (a, a, b)), loop_sign(b)) for a, b in itertools.permutations(ctx.loops, 2)
    ]
    terms.extend((_monomial(ctx, pair), pair[0].parity * pair[1].parity) for pair in ctx.coincident_pairs)
    terms.extend((_monomial(ctx, (t,)), t.parity) for t in ctx.triangles)
    return terms


def _sign_generator(ctx: PatternContext) -> tuple[str, int] | None:
    for a, b in itertools.combinations(ctx.loops, 2):
        if loop_sign(a) == loop_sign(b):
            return ("positive_loop_pair" if loop_sign(a) > 0 else "negative_loop_pair"), loop_sign(a)
    for triangle in ctx.triangles:
        return ("even_triangle" if triangle.parity == 1 else "odd_triangle"), triangle.parity
    for loop, two_cycle in ctx.coincident_pairs:
        parity = loop.parity * two_cycle.parity
        return ("even_loop_on_two_cycle" if parity == 1 else "odd_loop_on_two_cycle"), parity
    return None


def rule_prop33(pattern: ContextLike) -> Classification2:
    """Full classification of a 3-pattern from loops, 2-cycles and triangles."""
    ctx = as_context(pattern)
    if ctx.n != 3:
        raise DimensionError(f"The 3-pattern rule needs n = 3, got n = {ctx.n}.")

    present = [s.key for s in NONZERO_STRUCTURES if s.check(ctx)]
    if not present:
        return Classification2(
            verdict=Verdict.ZERO,
            evidence=[Evidence(rule_id="prop33", statement=THREE_PATTERN_STATEMENT, claim=Claim.ZERO)],
        )

    indefinite = [s.key for s in INDEFINITE_STRUCTURES if s.check(ctx)]
    if indefinite:
        terms = three_pattern_vertex_terms(ctx)
        positive = next(m for m, c in terms if c > 0)
        negative = next(m for m, c in terms if c < 0)
        logger.debug("prop33: indefinite via {}", indefinite)
        return Classification2(
            verdict=Verdict.INDEFINITE,
            evidence=[
                Evidence(
                    rule_id="prop33",
                    statement=THREE_PATTERN_STATEMENT,
                    claim=Claim.INDEFINITE,
                    data={"structures": indefinite, "nonzero_structures": present},
                )
            ],
            witnesses=Witnesses(kind="vertices", positive=[positive.to_text()], negative=[negative.to_text()]),
        )

    generator = _sign_generator(ctx)
    assert generator is not None
    key, sign = generator
    return Classification2(
        verdict=Verdict.POSITIVE if sign > 0 else Verdict.NEGATIVE,
        evidence=[
            Evidence(
                rule_id="prop33",
                statement=THREE_PATTERN_STATEMENT,
                claim=Claim.POSITIVE if sign > 0 else Claim.NEGATIVE,
                data={"generator": key, "nonzero_structures": present},
            )
        ],
    )


def direct_verdict(det2: MultiPoly) -> Verdict:
    """Verdict from term signs alone; decisive for 3-patterns."""
    if det2.is_zero():
        return Verdict.ZERO
    positive, negative = term_census(det2)
    if positive and negative:
        return Verdict.INDEFINITE
    return Verdict.POSITIVE if positive else Verdict.NEGATIVE


__all__ = (
    "INDEFINITE_STRUCTURES",
    "NONZERO_STRUCTURES",
    "CycleStructure",
    "LoopOnTwoCycle",
    "LoopTwoCycleAgainstTriangle",
    "LoopsWithEvenTwoCycle",
    "LoopsWithTriangleSameParity",
    "OppositeLoops",
    "OppositeTriangles",
    "OppositeTwoCyclesOnLoop",
    "Triangle",
    "TwoLoops",
    "direct_verdict",
    "loop_sign",
    "rule_prop33",
    "three_pattern_vertex_terms",
)
