import networkx as nx

from sns2.rules.abc import ABCRule
from sns2.rules.context import PatternContext
from sns2.signpat.isomorphism import contains_digraph


class HasOrder(ABCRule):
    def __init__(self, *orders: int) -> None:
        self.orders = frozenset(orders)

    def __repr__(self) -> str:
        return "<HasOrder: {}>".format(sorted(self.orders))

    def check(self, ctx: PatternContext) -> bool:
        return ctx.n in self.orders


class OrderResidue(ABCRule):
    """`n % modulus` is one of `residues`."""

    def __init__(self, modulus: int, *residues: int) -> None:
        self.modulus = modulus
        self.residues = frozenset(r % modulus for r in residues)

    def __repr__(self) -> str:
        return "<OrderResidue: n mod {} in {}>".format(self.modulus, sorted(self.residues))

    def check(self, ctx: PatternContext) -> bool:
        return ctx.n % self.modulus in self.residues


class HasCycle(ABCRule):
    """A cycle of the given length exists. `relative=k` asks for length `n + k`;
    `parity` (`1` even, `-1` odd) narrows the search."""

    def __init__(
        self,
        length: int | None = None,
        *,
        relative: int | None = None,
        parity: int | None = None,
    ) -> None:
        if (length is None) == (relative is None):
            raise ValueError("Give exactly one of `length` and `relative`.")
        self.length = length
        self.relative = relative
        self.parity = parity

    def __repr__(self) -> str:
        length = self.length if self.length is not None else "n{:+d}".format(self.relative)
        return "<HasCycle: length={}{}>".format(length, "" if self.parity is None else f", parity={self.parity}")

    def target_length(self, ctx: PatternContext) -> int:
        return self.length if self.length is not None else ctx.n + (self.relative or 0)

    def check(self, ctx: PatternContext) -> bool:
        return any(
            self.parity is None or cycle.parity == self.parity
            for cycle in ctx.cycles_of_length(self.target_length(ctx))
        )


class ContainsDigraph(ABCRule):
    """Unsigned subgraph test against a fixed digraph."""

    def __init__(self, name: str, digraph: nx.DiGraph) -> None:
        self.name = name
        self.digraph = digraph

    def __repr__(self) -> str:
        return "<ContainsDigraph: {}>".format(self.name)

    def check(self, ctx: PatternContext) -> bool:
        return contains_digraph(ctx.pattern, self.digraph)


__all__ = ("ContainsDigraph", "HasCycle", "HasOrder", "OrderResidue")
