import random

import pytest

from sns2.compound import det2, minor_sums
from sns2.error import DimensionError, PatternParseError, UnsupportedSizeError
from sns2.signpat import (
    SignedDigraph,
    SignPattern,
    are_isomorphic,
    contains_digraph,
    cycle_census,
    enumerate_cycles,
    hoopings,
    is_bipartite_cyclewise,
    minor_sum_via_hoopings,
    parse_pattern,
    unsigned_digraph,
    weakly_reversible_core,
)

from .test_compound import random_pattern


def test_parse_pattern():
    text = "# example\n+ - -\n+ + +\n\n+ 0 +\n"
    assert parse_pattern(text) == SignPattern.from_rows([[1, -1, -1], [1, 1, 1], [1, 0, 1]])


@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("+ -\n+ x\n", r"\[line 2, column 2\] Unexpected token 'x'"),
        ("+ - 0\n+ +\n", r"\[line 1\] Expected 2 tokens"),
        ("# nothing\n\n", "Empty pattern"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(PatternParseError, match=message):
        parse_pattern(text)


def test_pattern_validation():
    with pytest.raises(DimensionError):
        SignPattern.from_rows([[1, 2], [0, 0]])
    with pytest.raises(DimensionError):
        SignPattern(n=2, signs=((1, 0),))


def test_json_result():
    pattern = SignPattern.from_json('{"n": 2, "signs": [[1, 0], [-1, 1]]}').unwrap()
    assert pattern.signs == ((1, 0), (-1, 1))
    assert SignPattern.from_json('{"n": 2, "signs": [[1, 0]]}').unwrap_or_none() is None
    assert SignPattern.from_json("not json").unwrap_or_none() is None


def test_variable_numbering(example_three):
    assert example_three.nonzero_count() == 8
    assert example_three.variable_index(2, 2) == 8
    assert example_three.variable_map()[1, 0] == 4
    with pytest.raises(IndexError):
        example_three.variable_index(2, 1)
    matrix = example_three.symbolic_matrix()
    assert matrix[0, 1].to_text() == "-X2"
    assert matrix[2, 1].is_zero()


def test_transforms(example_three):
    assert example_three.negate().negate() == example_three
    assert example_three.transpose()[1, 0] == -1
    assert example_three.resign([(0, 1), (2, 1)])[0, 1] == 1
    sub = example_three.subpattern([(0, 0)])
    assert sub[0, 0] == 0
    assert sub.is_subpattern_of(example_three)
    assert not example_three.is_subpattern_of(sub)
    with pytest.raises(IndexError):
        example_three.resign([(3, 0)])


def test_cycles(example_three):
    cycles = enumerate_cycles(SignedDigraph.from_pattern(example_three))
    assert [c.length for c in cycles] == [1, 1, 1, 2, 2, 3]
    triangle = cycles[-1]
    assert triangle.vertices == (0, 1, 2)
    # arcs -, +, + : two positive arcs
    assert triangle.parity == 1
    assert cycles[0].parity == -1
    assert cycle_census(cycles) == {(1, -1): 3, (2, -1): 2, (3, 1): 1}


def test_digraph_round_trip(example_three):
    digraph = SignedDigraph.from_pattern(example_three)
    assert digraph.to_pattern() == example_three
    assert digraph.arc(0, 1).sign == -1
    assert digraph.arc(2, 1) is None


def test_hoopings(example_three):
    assert len(hoopings(example_three, 1)) == 3
    # three loop pairs and two 2-cycles
    assert len(hoopings(example_three, 2)) == 5
    for i in (1, 2, 3):
        assert minor_sum_via_hoopings(example_three, i) == minor_sums(example_three.symbolic_matrix())[i]
    with pytest.raises(DimensionError):
        minor_sum_via_hoopings(example_three, 4)


def test_hoopings_match_minors_on_random_patterns():
    rng = random.Random(3)
    for n in (3, 4, 5):
        for _ in range(10):
            pattern = random_pattern(rng, n)
            minors = minor_sums(pattern.symbolic_matrix())
            assert all(minor_sum_via_hoopings(pattern, i) == minors[i] for i in range(1, n + 1))


def test_weakly_reversible_core():
    pattern = SignPattern.from_rows([[1, 1, 0], [0, -1, 1], [0, -1, 0]])
    core = weakly_reversible_core(pattern)
    assert core == SignPattern.from_rows([[1, 0, 0], [0, -1, 1], [0, -1, 0]])


def test_core_of_strongly_connected_pattern(exbasic):
    assert weakly_reversible_core(exbasic) == exbasic


def test_core_preserves_det2():
    rng = random.Random(5)
    for n in (3, 4):
        for _ in range(15):
            pattern = random_pattern(rng, n, density=0.4)
            core = weakly_reversible_core(pattern)
            kept = [pattern.variable_index(i, j) for i, j, _ in core.entries()]
            value = det2(pattern.symbolic_matrix())
            assert value.variables() <= frozenset(kept)
            assert len(det2(core.symbolic_matrix())) == len(value)


def test_bipartite(hexagon):
    assert is_bipartite_cyclewise(SignedDigraph.from_pattern(hexagon))
    two_cycle = SignPattern.from_rows([[0, 1], [-1, 0]])
    assert is_bipartite_cyclewise(SignedDigraph.from_pattern(two_cycle))
    loop = SignPattern.from_rows([[1, 0], [0, 0]])
    assert not is_bipartite_cyclewise(SignedDigraph.from_pattern(loop))


def test_isomorphism(example_three):
    relabelled = SignPattern.from_rows([[1, -1, -1], [1, 1, 0], [1, 1, 1]])
    assert are_isomorphic(example_three, example_three.transpose())
    assert not are_isomorphic(example_three, example_three.negate())
    assert are_isomorphic(example_three, relabelled)
    assert not are_isomorphic(example_three, example_three.subpattern([(0, 0)]))
    with pytest.raises(UnsupportedSizeError):
        are_isomorphic(SignPattern.zero(9), SignPattern.zero(9))


def test_contains_digraph(loop_on_four_cycle):
    target = unsigned_digraph(5, [(0, 0), (0, 1), (1, 2), (2, 3), (3, 0)])
    assert contains_digraph(loop_on_four_cycle, target)
    assert contains_digraph(loop_on_four_cycle.negate(), target)
    assert not contains_digraph(loop_on_four_cycle.subpattern([(0, 0)]), target)
