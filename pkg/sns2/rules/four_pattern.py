import dataclasses
import itertools
import typing

from fntypes.option import Nothing, Option, Some

from sns2.compound.compound import det2
from sns2.compound.minor_sums import minor_sums
from sns2.error import DimensionError
from sns2.modules import logger
from sns2.poly.matrix import PolyMatrix
from sns2.poly.multipoly import MultiPoly, term_census
from sns2.rules.abc import ABCRule
from sns2.rules.context import ContextLike, PatternContext, as_context
from sns2.rules.sign import sign_of_expression, sign_of_product
from sns2.rules.verdict import Claim, Evidence, SignClass3
from sns2.signpat.pattern import Entry

PROPERTY_P_STATEMENT = (
    "a 4-pattern without triangles whose loops and 2-cycles are odd and whose 4-cycles are even has det2 >= 0"
)
Q4_STATEMENT = "q4 = -J1^2*J4 - J3*(J3 - J1*J2)"

type StageKind = typing.Literal["loops", "disjoint_pair", "two_cycle", "edge"]


class HasPropertyP(ABCRule):
    """No triangles; loops and 2-cycles odd; 4-cycles even."""

    def check(self, ctx: PatternContext) -> bool:
        required = {1: -1, 2: -1, 4: 1}
        for cycle in ctx.cycles:
            if cycle.length == 3:
                return False
            if cycle.length in required and cycle.parity != required[cycle.length]:
                return False
        return True


@dataclasses.dataclass(frozen=True, slots=True)
class Stage:
    """One step of the increasing sequence of subpatterns; `entries` is cumulative."""

    kind: StageKind
    added: tuple[Entry, ...]
    entries: frozenset[Entry]


def staged_construction(pattern: ContextLike) -> list[Stage]:
    """Loops first, then pairs of disjoint 2-cycles, then the remaining 2-cycles one at a
    time, then the remaining edges one at a time."""
    ctx = as_context(pattern)
    stages: list[Stage] = []
    entries: frozenset[Entry] = frozenset()

    def push(kind: StageKind, added: typing.Iterable[Entry]) -> None:
        nonlocal entries
        new = tuple(sorted(set(added) - entries))
        if new:
            entries = entries | set(new)
            stages.append(Stage(kind=kind, added=new, entries=entries))

    push("loops", (loop.arcs[0].entry for loop in ctx.loops))
    for a, b in itertools.combinations(ctx.two_cycles, 2):
        arcs = {arc.entry for arc in (*a.arcs, *b.arcs)}
        if not (a.vertex_set & b.vertex_set) and not (arcs & entries):
            push("disjoint_pair", arcs)
    for cycle in ctx.two_cycles:
        push("two_cycle", (arc.entry for arc in cycle.arcs))
    for i, j, _ in ctx.pattern.entries():
        push("edge", ((i, j),))
    return stages


def stage_matrix(pattern: ContextLike, entries: typing.Iterable[Entry]) -> PolyMatrix:
    """The symbolic matrix of the pattern with every entry outside `entries` set to zero."""
    ctx = as_context(pattern)
    keep = frozenset(entries)
    zero = MultiPoly.zero(ctx.matrix.arity)
    return PolyMatrix(
        [
            [entry if (i, j) in keep else zero for j, entry in enumerate(row)]
            for i, row in enumerate(ctx.matrix.rows)
        ],
        ctx.matrix.arity,
    )


def disjoint_pair_increment(
    before: PolyMatrix,
    after: PolyMatrix,
    alpha: tuple[int, int],
    beta: tuple[int, int],
) -> MultiPoly:
    """Closed form of `q4(after) - q4(before)` when `after` adds 2-cycles on the disjoint vertex
    pairs `alpha` and `beta` without creating triangles.

    With `a`, `b` the loop sums on `alpha`, `beta`, `C` the new 2-cycle terms and
    `R = J4 + C_alpha*C_beta - J4'`:
    `a*b*(C_alpha - C_beta)^2 + (b*C_alpha + a*C_beta)*(J1*J2 - J3) + (a*C_alpha + b*C_beta)*J3 + J1^2*R`.
    """
    j = minor_sums(before)
    j_after = minor_sums(after)
    a = before[alpha[0], alpha[0]] + before[alpha[1], alpha[1]]
    b = before[beta[0], beta[0]] + before[beta[1], beta[1]]
    c_alpha = -(after[alpha[0], alpha[1]] * after[alpha[1], alpha[0]])
    c_beta = -(after[beta[0], beta[1]] * after[beta[1], beta[0]])
    r = j[4] + c_alpha * c_beta - j_after[4]
    return (
        a * b * (c_alpha - c_beta) ** 2
        + (b * c_alpha + a * c_beta) * (j[1] * j[2] - j[3])
        + (a * c_alpha + b * c_beta) * j[3]
        + j[1] ** 2 * r
    )


def _strict_stage(ctx: PatternContext, stages: list[Stage]) -> int | None:
    for index, stage in enumerate(stages):
        value = det2(stage_matrix(ctx, stage.entries))
        positive, negative = term_census(value)
        if positive and not negative:
            return index
    return None


def rule_prop44(pattern: ContextLike) -> Option[Evidence]:
    """Fires iff property P holds; det2 then increases along `staged_construction`.

    The claim is strengthened to `> 0` when some stage already has a det2 with only
    positive terms.
    """
    ctx = as_context(pattern)
    if ctx.n != 4:
        raise DimensionError(f"Property P applies to 4-patterns, got n = {ctx.n}.")
    if not HasPropertyP().check(ctx):
        return Nothing()
    stages = staged_construction(ctx)
    strict = _strict_stage(ctx, stages)
    kinds = [stage.kind for stage in stages]
    logger.info("prop44_P fired ({} stages, strict stage {})", len(stages), strict)
    return Some(
        Evidence(
            rule_id="prop44_P",
            statement=PROPERTY_P_STATEMENT,
            claim=Claim.POSITIVE if strict is not None else Claim.NONNEGATIVE,
            data={
                "loops": len(ctx.loops),
                "disjoint_pairs": kinds.count("disjoint_pair"),
                "remaining_two_cycles": kinds.count("two_cycle"),
                "remaining_edges": kinds.count("edge"),
                "stages": len(stages),
                "strict_stage": strict,
            },
        )
    )


def rule_q4_minor_signs(pattern: ContextLike) -> Option[Evidence]:
    """Sign of a 4-pattern from the signs of `J1..J4` through `q4`."""
    ctx = as_context(pattern)
    if ctx.n != 4:
        raise DimensionError(f"q4 applies to 4-patterns, got n = {ctx.n}.")
    j = ctx.minors
    budget, seed = min(ctx.witness_budget, 256), ctx.seed
    s1 = sign_of_expression(j[1], budget=budget, seed=seed)
    s4 = sign_of_expression(j[4], budget=budget, seed=seed)
    data: dict[str, typing.Any] = {"J1": s1.value, "J4": s4.value}
    claim: Claim | None = None

    if s1 is SignClass3.ZERO:
        claim = Claim.NONPOSITIVE
        data["reduced"] = "-J3^2"
    elif not j[2]:
        data["reduced"] = "-J1^2*J4 - J3^2"
        if s4 is SignClass3.POSITIVE:
            claim = Claim.NEGATIVE if s1.is_strict else Claim.NONPOSITIVE
        elif s4 is SignClass3.ZERO:
            claim = Claim.NONPOSITIVE
    else:
        t = sign_of_product(j[3], j[3] - j[1] * j[2], budget=budget, seed=seed)
        data["J3*(J3 - J1*J2)"] = t.value
        if t is SignClass3.POSITIVE and s4 in (SignClass3.POSITIVE, SignClass3.ZERO):
            claim = Claim.NEGATIVE
        elif t is SignClass3.NEGATIVE and s4 in (SignClass3.NEGATIVE, SignClass3.ZERO):
            claim = Claim.POSITIVE
        elif t is SignClass3.ZERO and s4.is_strict:
            if s4 is SignClass3.POSITIVE:
                claim = Claim.NEGATIVE if s1.is_strict else Claim.NONPOSITIVE
            else:
                claim = Claim.POSITIVE if s1.is_strict else Claim.NONNEGATIVE

    if claim is None:
        return Nothing()
    logger.info("q4_minor_signs fired: det2 {}", claim.value)
    return Some(Evidence(rule_id="q4_minor_signs", statement=Q4_STATEMENT, claim=claim, data=data))


__all__ = (
    "HasPropertyP",
    "Stage",
    "disjoint_pair_increment",
    "rule_prop44",
    "rule_q4_minor_signs",
    "stage_matrix",
    "staged_construction",
)
