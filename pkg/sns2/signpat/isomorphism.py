import typing

import networkx as nx
from networkx.algorithms import isomorphism as iso

from sns2.error import UnsupportedSizeError
from sns2.signpat.digraph import SignedDigraph
from sns2.signpat.pattern import SignPattern

ISOMORPHISM_BOUND: typing.Final[int] = 8

_sign_match = iso.categorical_edge_match("sign", 0)


def are_isomorphic(p: SignPattern, q: SignPattern) -> bool:
    """True iff a vertex relabelling maps the signed digraph of `q` onto that of `p` or of `p^T`."""
    for pattern in (p, q):
        if pattern.n > ISOMORPHISM_BOUND:
            raise UnsupportedSizeError("pattern isomorphism", pattern.n, ISOMORPHISM_BOUND)
    if p.n != q.n or p.nonzero_count() != q.nonzero_count():
        return False
    target = SignedDigraph.from_pattern(q).to_networkx()
    return any(
        nx.is_isomorphic(SignedDigraph.from_pattern(candidate).to_networkx(), target, edge_match=_sign_match)
        for candidate in (p, p.transpose())
    )


def contains_digraph(pattern: SignPattern, digraph: nx.DiGraph) -> bool:
    """Unsigned test: does the digraph of `pattern` contain a copy of `digraph` (loops included)?"""
    if digraph.number_of_nodes() > pattern.n:
        return False
    host = SignedDigraph.from_pattern(pattern).unsigned()
    return iso.DiGraphMatcher(host, digraph).subgraph_is_monomorphic()


def unsigned_digraph(n: int, arcs: typing.Iterable[tuple[int, int]]) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from(arcs)
    return graph


__all__ = ("ISOMORPHISM_BOUND", "are_isomorphic", "contains_digraph", "unsigned_digraph")
