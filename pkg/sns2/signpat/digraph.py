import collections
import dataclasses
import typing

import networkx as nx

from sns2.signpat.pattern import SignPattern


class Arc(typing.NamedTuple):
    """Signed arc `source -> target`; it stands for the entry `M[target][source]`."""

    source: int
    target: int
    sign: int

    @property
    def entry(self) -> tuple[int, int]:
        return self.target, self.source


@dataclasses.dataclass(frozen=True, slots=True)
class SignedDigraph:
    """Signed digraph of a pattern: one arc `j -> i` per nonzero entry `(i, j)`, loops included."""

    n: int
    arcs: frozenset[Arc]

    def __repr__(self) -> str:
        return "<SignedDigraph: n={}, arcs={}>".format(self.n, len(self.arcs))

    @classmethod
    def from_pattern(cls, pattern: SignPattern) -> typing.Self:
        return cls(n=pattern.n, arcs=frozenset(Arc(j, i, s) for i, j, s in pattern.entries()))

    @classmethod
    def from_arcs(cls, n: int, arcs: typing.Iterable[tuple[int, int, int]]) -> typing.Self:
        """Build from `(source, target, sign)` triples (0-based); at most one arc per ordered pair."""
        seen: dict[tuple[int, int], int] = {}
        for source, target, sign in arcs:
            if not (0 <= source < n and 0 <= target < n):
                raise IndexError(f"Arc {source} -> {target} leaves the vertex range 0..{n - 1}.")
            if sign not in (-1, 1):
                raise ValueError(f"Arc sign must be -1 or 1, got {sign!r}.")
            if seen.setdefault((source, target), sign) != sign:
                raise ValueError(f"Conflicting signs on arc {source} -> {target}.")
        return cls(n=n, arcs=frozenset(Arc(s, t, sign) for (s, t), sign in seen.items()))

    def to_pattern(self) -> SignPattern:
        signs = [[0] * self.n for _ in range(self.n)]
        for arc in self.arcs:
            signs[arc.target][arc.source] = arc.sign
        return SignPattern.from_rows(signs)

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((arc.source, arc.target, {"sign": arc.sign}) for arc in sorted(self.arcs))
        return graph

    def unsigned(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from((arc.source, arc.target) for arc in sorted(self.arcs))
        return graph

    def arc(self, source: int, target: int) -> Arc | None:
        return next((a for a in self.arcs if a.source == source and a.target == target), None)


@dataclasses.dataclass(frozen=True, slots=True)
class Cycle:
    """Simple directed cycle, rotated so that the smallest vertex comes first.

    `parity` is `-1` (odd) when the cycle has an odd number of positive arcs
    and `+1` (even) otherwise.
    """

    vertices: tuple[int, ...]
    arcs: tuple[Arc, ...]

    def __repr__(self) -> str:
        return "<Cycle: {} ({})>".format(
            " -> ".join(str(v + 1) for v in (*self.vertices, self.vertices[0])),
            "even" if self.parity == 1 else "odd",
        )

    @classmethod
    def from_vertices(cls, digraph: SignedDigraph, vertices: typing.Sequence[int]) -> typing.Self:
        start = vertices.index(min(vertices))
        rotated = tuple(vertices[start:]) + tuple(vertices[:start])
        arcs = []
        for k, source in enumerate(rotated):
            arc = digraph.arc(source, rotated[(k + 1) % len(rotated)])
            if arc is None:
                raise ValueError(f"{rotated!r} is not a cycle of the digraph.")
            arcs.append(arc)
        return cls(vertices=rotated, arcs=tuple(arcs))

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    @property
    def parity(self) -> int:
        return -1 if sum(1 for arc in self.arcs if arc.sign > 0) % 2 else 1

    @property
    def sign_product(self) -> int:
        return -1 if sum(1 for arc in self.arcs if arc.sign < 0) % 2 else 1

    @property
    def is_odd(self) -> bool:
        return self.parity == -1

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return self.length, self.vertices


def enumerate_cycles(digraph: SignedDigraph) -> list[Cycle]:
    """All simple directed cycles ordered by `(length, vertices)`."""
    cycles = {
        Cycle.from_vertices(digraph, vertices) for vertices in nx.simple_cycles(digraph.unsigned())
    }
    return sorted(cycles, key=Cycle.sort_key)


def cycle_census(cycles: typing.Iterable[Cycle]) -> dict[tuple[int, int], int]:
    """Counts by `(length, parity)`."""
    return dict(sorted(collections.Counter((c.length, c.parity) for c in cycles).items()))


def weakly_reversible_core(pattern: SignPattern) -> SignPattern:
    """Zero every entry whose arc lies on no directed cycle.

    An arc lies on a cycle iff both ends share a strongly connected component.
    """
    graph = SignedDigraph.from_pattern(pattern).unsigned()
    component: dict[int, int] = {}
    for index, members in enumerate(nx.strongly_connected_components(graph)):
        for vertex in members:
            component[vertex] = index
    return SignPattern.from_rows(
        [
            [s if s and component[i] == component[j] else 0 for j, s in enumerate(row)]
            for i, row in enumerate(pattern.signs)
        ]
    )


def is_bipartite_cyclewise(digraph: SignedDigraph) -> bool:
    """True iff the digraph has no directed cycle of odd length.

    A strongly connected digraph has an odd directed cycle exactly when its
    underlying undirected graph is not bipartite.
    """
    if any(arc.source == arc.target for arc in digraph.arcs):
        return False
    graph = digraph.unsigned()
    for members in nx.strongly_connected_components(graph):
        if len(members) > 1 and not nx.is_bipartite(graph.subgraph(members).to_undirected()):
            return False
    return True


__all__ = (
    "Arc",
    "Cycle",
    "SignedDigraph",
    "cycle_census",
    "enumerate_cycles",
    "is_bipartite_cyclewise",
    "weakly_reversible_core",
)
