from sns2.signpat.digraph import (
    Arc,
    Cycle,
    SignedDigraph,
    cycle_census,
    enumerate_cycles,
    is_bipartite_cyclewise,
    weakly_reversible_core,
)
from sns2.signpat.hooping import Hooping, hoopings, minor_sum_via_hoopings
from sns2.signpat.isomorphism import ISOMORPHISM_BOUND, are_isomorphic, contains_digraph, unsigned_digraph
from sns2.signpat.pattern import Entry, PatternFile, Sign, SignPattern, parse_pattern

__all__ = (
    "ISOMORPHISM_BOUND",
    "Arc",
    "Cycle",
    "Entry",
    "Hooping",
    "PatternFile",
    "Sign",
    "SignPattern",
    "SignedDigraph",
    "are_isomorphic",
    "contains_digraph",
    "cycle_census",
    "enumerate_cycles",
    "hoopings",
    "is_bipartite_cyclewise",
    "minor_sum_via_hoopings",
    "parse_pattern",
    "unsigned_digraph",
    "weakly_reversible_core",
)
