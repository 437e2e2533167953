import dataclasses
import math

from sns2.error import DimensionError
from sns2.poly.multipoly import MultiPoly
from sns2.signpat.digraph import Cycle, SignedDigraph, enumerate_cycles
from sns2.signpat.pattern import SignPattern


@dataclasses.dataclass(frozen=True, slots=True)
class Hooping:
    """Pairwise disjoint cycles; one signed term of the minor-sum `J_i`, `i` the number of covered vertices."""

    cycles: tuple[Cycle, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset().union(*(c.vertex_set for c in self.cycles))

    @property
    def size(self) -> int:
        return sum(c.length for c in self.cycles)

    @property
    def parity(self) -> int:
        """`par(E)` of the union of the arc sets."""
        return math.prod(c.parity for c in self.cycles)

    @property
    def permutation_sign(self) -> int:
        return math.prod(-1 if (c.length - 1) % 2 else 1 for c in self.cycles)

    @property
    def sign(self) -> int:
        return self.parity * self.permutation_sign * (-1 if self.size % 2 else 1)

    def contribution(self, pattern: SignPattern) -> MultiPoly:
        arity = pattern.nonzero_count()
        variables = pattern.variable_map()
        exponents = [0] * arity
        for cycle in self.cycles:
            for arc in cycle.arcs:
                exponents[variables[arc.entry] - 1] += 1
        return MultiPoly(arity, {tuple(exponents): self.sign})


def hoopings(pattern: SignPattern, i: int) -> list[Hooping]:
    """All hoopings covering exactly `i` vertices, in cycle-list order."""
    cycles = enumerate_cycles(SignedDigraph.from_pattern(pattern))
    found: list[Hooping] = []

    def extend(start: int, chosen: list[Cycle], used: frozenset[int], size: int) -> None:
        if size == i:
            found.append(Hooping(tuple(chosen)))
            return
        for k in range(start, len(cycles)):
            cycle = cycles[k]
            if size + cycle.length <= i and not (used & cycle.vertex_set):
                extend(k + 1, [*chosen, cycle], used | cycle.vertex_set, size + cycle.length)

    extend(0, [], frozenset(), 0)
    return found


def minor_sum_via_hoopings(pattern: SignPattern, i: int) -> MultiPoly:
    if not 1 <= i <= pattern.n:
        raise DimensionError(f"Minor-sum index must lie in 1..{pattern.n}, got {i}.")
    total = MultiPoly.zero(pattern.nonzero_count())
    for hooping in hoopings(pattern, i):
        total = total + hooping.contribution(pattern)
    return total


__all__ = ("Hooping", "hoopings", "minor_sum_via_hoopings")
