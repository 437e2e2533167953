from fntypes.option import Nothing, Option, Some

from sns2.error import InconsistencyError
from sns2.modules import logger
from sns2.rules.context import ContextLike, as_context
from sns2.rules.verdict import Claim, Evidence
from sns2.signpat.digraph import is_bipartite_cyclewise

BIPARTITE_STATEMENT = "a pattern whose digraph has no odd cycle has det2 = 0"


def rule_bipartite(pattern: ContextLike) -> Option[Evidence]:
    """Fires iff the digraph has no cycle of odd length (loops count as odd).

    Every hooping then covers an even number of vertices, so all odd-index
    minor-sums vanish; this is checked against the computed `J_i`.
    """
    ctx = as_context(pattern)
    if not is_bipartite_cyclewise(ctx.digraph):
        return Nothing()
    odd = list(range(1, ctx.n + 1, 2))
    for i in odd:
        if ctx.minors.get(i):
            raise InconsistencyError("bipartite_zero", f"J{i} is nonzero for a digraph without odd cycles")
    logger.info("bipartite_zero fired for n={}", ctx.n)
    return Some(
        Evidence(
            rule_id="bipartite_zero",
            statement=BIPARTITE_STATEMENT,
            claim=Claim.ZERO,
            data={"vanishing_minor_sums": odd},
        )
    )


__all__ = ("rule_bipartite",)
