import dataclasses
import enum
import typing

from sns2.modules import logger
from sns2.rules.abc import ABCRule
from sns2.rules.context import ContextLike, as_context
from sns2.rules.structure import ContainsDigraph, HasCycle, HasOrder, OrderResidue
from sns2.rules.verdict import Claim, Evidence
from sns2.signpat.isomorphism import unsigned_digraph


class Side(str, enum.Enum):
    """The semidefiniteness an obstruction rules out."""

    NONNEGATIVE = "nonnegative"
    NONPOSITIVE = "nonpositive"

    @property
    def claim(self) -> Claim:
        return Claim.NOT_NONNEGATIVE if self is Side.NONNEGATIVE else Claim.NOT_NONPOSITIVE


BOTH_SIDES: typing.Final[frozenset[Side]] = frozenset(Side)


@dataclasses.dataclass(frozen=True, slots=True)
class Obstruction:
    """An unsigned structure whose presence rules out one (or both) signs of semidefiniteness."""

    rule_id: str
    name: str
    statement: str
    rule: ABCRule
    excludes: frozenset[Side]


LOOP_ON_FOUR_CYCLE = unsigned_digraph(5, [(0, 0), (0, 1), (1, 2), (2, 3), (3, 0)])
TRIANGLE_AND_TWO_FOUR_CYCLES = unsigned_digraph(
    8,
    [(0, 1), (1, 2), (2, 0), (2, 3), (3, 0), (4, 3), (3, 5), (5, 6), (6, 4)],
)
TRIANGLE_WITH_TWO_CYCLE_AND_LOOPS = unsigned_digraph(6, [(0, 1), (1, 2), (2, 0), (2, 1), (1, 1), (3, 3), (4, 4)])

OBSTRUCTIONS: typing.Final[tuple[Obstruction, ...]] = (
    Obstruction(
        rule_id="obstruction_mod8",
        name="cycle_of_length_n-1_n_0_mod_8",
        statement="n = 0 (mod 8) and an (n-1)-cycle: det2 is not <= 0",
        rule=OrderResidue(8, 0) & HasCycle(relative=-1),
        excludes=frozenset({Side.NONPOSITIVE}),
    ),
    Obstruction(
        rule_id="obstruction_mod8",
        name="cycle_of_length_n-1_n_4_mod_8",
        statement="n = 4 (mod 8) and an (n-1)-cycle: det2 is not >= 0",
        rule=OrderResidue(8, 4) & HasCycle(relative=-1),
        excludes=frozenset({Side.NONNEGATIVE}),
    ),
    Obstruction(
        rule_id="obstruction_mod8",
        name="cycle_of_length_n_n_1_mod_8",
        statement="n = 1 (mod 8) and an n-cycle: det2 is not <= 0",
        rule=OrderResidue(8, 1) & HasCycle(relative=0),
        excludes=frozenset({Side.NONPOSITIVE}),
    ),
    Obstruction(
        rule_id="obstruction_mod8",
        name="cycle_of_length_n_n_5_mod_8",
        statement="n = 5 (mod 8) and an n-cycle: det2 is not >= 0",
        rule=OrderResidue(8, 5) & HasCycle(relative=0),
        excludes=frozenset({Side.NONNEGATIVE}),
    ),
    Obstruction(
        rule_id="obstruction_known",
        name="loop_on_four_cycle",
        statement="a 5-pattern with a loop on a 4-cycle: that subpattern has q5 = -J1^2*J4^2 < 0",
        rule=HasOrder(5) & ContainsDigraph("loop_on_four_cycle", LOOP_ON_FOUR_CYCLE),
        excludes=frozenset({Side.NONNEGATIVE}),
    ),
    Obstruction(
        rule_id="obstruction_known",
        name="triangle_and_two_four_cycles",
        statement="an 8-pattern with a triangle and two 4-cycles as drawn: that subpattern has q8 > 0",
        rule=HasOrder(8) & ContainsDigraph("triangle_and_two_four_cycles", TRIANGLE_AND_TWO_FOUR_CYCLES),
        excludes=frozenset({Side.NONPOSITIVE}),
    ),
    Obstruction(
        rule_id="obstruction_known",
        name="triangle_with_two_cycle_and_loops",
        statement="a 6-pattern containing a triangle, a 2-cycle on one of its arcs and three loops is indefinite",
        rule=HasOrder(6) & ContainsDigraph("triangle_with_two_cycle_and_loops", TRIANGLE_WITH_TWO_CYCLE_AND_LOOPS),
        excludes=BOTH_SIDES,
    ),
)


def excluded_sides(n: int, excludes: frozenset[Side]) -> frozenset[Side]:
    """For n = 2, 3 (mod 4), det2(-M) = -det2(M), so one excluded side excludes both."""
    return BOTH_SIDES if excludes and n % 4 in (2, 3) else excludes


def rule_cycle_obstructions(pattern: ContextLike) -> list[Evidence]:
    ctx = as_context(pattern)
    findings: list[Evidence] = []
    for obstruction in OBSTRUCTIONS:
        if not obstruction.rule.check(ctx):
            continue
        sides = excluded_sides(ctx.n, obstruction.excludes)
        logger.info("{} ({}) excludes {}", obstruction.rule_id, obstruction.name, sorted(s.value for s in sides))
        findings.extend(
            Evidence(
                rule_id=obstruction.rule_id,
                statement=obstruction.statement,
                claim=side.claim,
                data={"obstruction": obstruction.name, "promoted": side not in obstruction.excludes},
            )
            for side in sorted(sides, key=lambda s: s.value)
        )
    return findings


__all__ = (
    "BOTH_SIDES",
    "LOOP_ON_FOUR_CYCLE",
    "OBSTRUCTIONS",
    "TRIANGLE_AND_TWO_FOUR_CYCLES",
    "TRIANGLE_WITH_TWO_CYCLE_AND_LOOPS",
    "Obstruction",
    "Side",
    "excluded_sides",
    "rule_cycle_obstructions",
)
