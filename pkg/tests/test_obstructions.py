import random

import pytest

from sns2.compound import det2, minor_sums, qn_from_minor_sums
from sns2.rules import (
    OBSTRUCTIONS,
    Claim,
    Side,
    Verdict,
    classify,
    excluded_sides,
    rule_cycle_obstructions,
)
from sns2.signpat import SignPattern

from .fixtures.patterns import pattern_from_arcs


def cycle(n: int, length: int) -> SignPattern:
    return pattern_from_arcs(n, [(k, (k + 1) % length) for k in range(length)])


def claims(pattern: SignPattern) -> list[tuple[Claim, str]]:
    return [(e.claim, e.data["obstruction"]) for e in rule_cycle_obstructions(pattern)]


def test_obstruction_table():
    assert len(OBSTRUCTIONS) == 7
    assert {o.rule_id for o in OBSTRUCTIONS} == {"obstruction_mod8", "obstruction_known"}


def test_excluded_sides():
    nonpositive = frozenset({Side.NONPOSITIVE})
    assert excluded_sides(4, nonpositive) == nonpositive
    assert excluded_sides(6, nonpositive) == frozenset(Side)
    assert excluded_sides(7, frozenset()) == frozenset()
    assert Side.NONNEGATIVE.claim is Claim.NOT_NONNEGATIVE


def test_triangle_in_four_pattern():
    pattern = cycle(4, 3)
    assert claims(pattern) == [(Claim.NOT_NONNEGATIVE, "cycle_of_length_n-1_n_4_mod_8")]
    j = minor_sums(pattern.symbolic_matrix())
    assert det2(pattern.symbolic_matrix()) == -(j[3] ** 2)
    result = classify(pattern)
    assert result.verdict is Verdict.NEGATIVE
    assert result.fired("obstruction_mod8")


def test_five_cycle():
    pattern = cycle(5, 5)
    assert claims(pattern) == [(Claim.NOT_NONNEGATIVE, "cycle_of_length_n_n_5_mod_8")]
    j = minor_sums(pattern.symbolic_matrix())
    assert det2(pattern.symbolic_matrix()) == -(j[5] ** 2)
    assert classify(pattern).verdict is Verdict.NEGATIVE


@pytest.mark.parametrize(
    ("n", "length", "name"),
    [
        (8, 7, "cycle_of_length_n-1_n_0_mod_8"),
        (9, 9, "cycle_of_length_n_n_1_mod_8"),
    ],
)
def test_nonpositivity_obstructions(n, length, name):
    assert claims(cycle(n, length)) == [(Claim.NOT_NONPOSITIVE, name)]


def test_loop_on_four_cycle(loop_on_four_cycle):
    assert claims(loop_on_four_cycle) == [(Claim.NOT_NONNEGATIVE, "loop_on_four_cycle")]
    j = minor_sums(loop_on_four_cycle.symbolic_matrix())
    assert det2(loop_on_four_cycle.symbolic_matrix()) == -(j[1] ** 2) * j[4] ** 2
    result = classify(loop_on_four_cycle)
    assert result.verdict is Verdict.NEGATIVE
    assert result.fired("obstruction_known")


def test_triangle_and_two_four_cycles(triangle_and_two_four_cycles):
    assert claims(triangle_and_two_four_cycles) == [(Claim.NOT_NONPOSITIVE, "triangle_and_two_four_cycles")]


@pytest.mark.slow
def test_q8_is_a_positive_square(triangle_and_two_four_cycles):
    rng = random.Random(8)
    arcs = triangle_and_two_four_cycles.entries()
    for _ in range(50):
        flips = [(i, j) for i, j, _ in arcs if rng.random() < 0.5]
        j = minor_sums(triangle_and_two_four_cycles.resign(flips).symbolic_matrix())
        q8 = qn_from_minor_sums(j)
        assert all(j[k].is_zero() for k in (1, 2, 5, 6, 8))
        assert q8 == j[7] ** 2 * (j[7] - j[3] * j[4]) ** 2
        assert len(q8) == 1 and next(iter(q8.terms.values())) > 0


def test_triangle_with_two_cycle_and_loops(triangle_with_two_cycle_and_loops):
    evidence = rule_cycle_obstructions(triangle_with_two_cycle_and_loops)
    assert [e.claim for e in evidence] == [Claim.NOT_NONNEGATIVE, Claim.NOT_NONPOSITIVE]
    assert not any(e.data["promoted"] for e in evidence)


def test_no_obstruction(example_three):
    assert rule_cycle_obstructions(example_three) == []
