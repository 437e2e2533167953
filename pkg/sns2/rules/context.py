from functools import cached_property

from sns2.compound.compound import det2
from sns2.compound.minor_sums import MinorSums, minor_sums
from sns2.config import DEFAULT_WITNESS_BUDGET
from sns2.error import ZeroPolynomialError
from sns2.poly.matrix import PolyMatrix
from sns2.poly.multipoly import MultiPoly
from sns2.polytope.newton import NewtonPolytope, newton_polytope
from sns2.signpat.digraph import Cycle, SignedDigraph, cycle_census, enumerate_cycles
from sns2.signpat.pattern import SignPattern


class PatternContext:
    """Everything the rules ask about one sign pattern, computed on first use.

    ```
    ctx = PatternContext(pattern)
    ctx.loops      #> [<Cycle: 1 -> 1 (odd)>, ...]
    ctx.det2       #> <MultiPoly: ...>
    ```
    """

    def __init__(
        self,
        pattern: SignPattern,
        *,
        witness_budget: int = DEFAULT_WITNESS_BUDGET,
        seed: int = 0,
    ) -> None:
        self.pattern = pattern
        self.witness_budget = witness_budget
        self.seed = seed

    def __repr__(self) -> str:
        return "<{}: n={}, entries={}>".format(self.__class__.__name__, self.n, self.pattern.nonzero_count())

    @classmethod
    def of(cls, value: "SignPattern | PatternContext", /) -> "PatternContext":
        return value if isinstance(value, PatternContext) else cls(value)

    @property
    def n(self) -> int:
        return self.pattern.n

    @cached_property
    def digraph(self) -> SignedDigraph:
        return SignedDigraph.from_pattern(self.pattern)

    @cached_property
    def cycles(self) -> list[Cycle]:
        return enumerate_cycles(self.digraph)

    def cycles_of_length(self, length: int) -> list[Cycle]:
        return [c for c in self.cycles if c.length == length]

    @cached_property
    def loops(self) -> list[Cycle]:
        return self.cycles_of_length(1)

    @cached_property
    def two_cycles(self) -> list[Cycle]:
        return self.cycles_of_length(2)

    @cached_property
    def triangles(self) -> list[Cycle]:
        return self.cycles_of_length(3)

    @cached_property
    def census(self) -> dict[tuple[int, int], int]:
        return cycle_census(self.cycles)

    @cached_property
    def coincident_pairs(self) -> list[tuple[Cycle, Cycle]]:
        """`(loop, 2-cycle)` pairs where the loop sits on a vertex of the 2-cycle."""
        return [
            (loop, two_cycle)
            for loop in self.loops
            for two_cycle in self.two_cycles
            if loop.vertices[0] in two_cycle.vertex_set
        ]

    @cached_property
    def matrix(self) -> PolyMatrix:
        return self.pattern.symbolic_matrix()

    @cached_property
    def minors(self) -> MinorSums:
        return minor_sums(self.matrix)

    @cached_property
    def det2(self) -> MultiPoly:
        return det2(self.matrix)

    @cached_property
    def polytope(self) -> NewtonPolytope:
        if self.det2.is_zero():
            raise ZeroPolynomialError("PatternContext.polytope")
        return newton_polytope(self.det2)

    def vertex_sign(self) -> int:
        """Common sign of the vertex terms of `det2`; `0` when they are mixed."""
        signs = self.polytope.vertex_signs()
        return next(iter(signs)) if len(signs) == 1 else 0


type ContextLike = SignPattern | PatternContext


def as_context(value: ContextLike, /) -> PatternContext:
    return PatternContext.of(value)


__all__ = ("ContextLike", "PatternContext", "as_context")
