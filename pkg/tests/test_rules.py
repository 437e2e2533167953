import itertools
import random
from fractions import Fraction

import pytest
from fntypes.option import Nothing, Some

from sns2.compound import det2, minor_sums
from sns2.error import DimensionError
from sns2.poly import MultiPoly, term_census
from sns2.polytope import indefiniteness_witness, newton_polytope, random_positive_point, vertex_terms
from sns2.rules import (
    Claim,
    FuncRule,
    HasCycle,
    HasOrder,
    HasPropertyP,
    PatternContext,
    SignClass3,
    Verdict,
    classify,
    classify_det2,
    direct_verdict,
    disjoint_pair_increment,
    is_indef2_case,
    rule_bipartite,
    rule_five_pattern_lemmas,
    rule_prop33,
    rule_prop44,
    rule_q4_minor_signs,
    sign_of_expression,
    sign_of_product,
    stage_matrix,
    staged_construction,
    three_pattern_vertex_terms,
)
from sns2.signpat import SignPattern

from .fixtures.matrices import variables
from .test_compound import random_pattern


def all_patterns(n: int):
    for signs in itertools.product((0, 1, -1), repeat=n * n):
        yield SignPattern.from_rows([signs[i * n : (i + 1) * n] for i in range(n)])


def test_rule_combinators(example_three):
    ctx = PatternContext(example_three)
    assert (HasOrder(3) & HasCycle(3)).check(ctx)
    assert (HasOrder(4) | HasCycle(2)).check(ctx)
    assert not (~HasCycle(relative=0)).check(ctx)
    assert (HasCycle(3, parity=1) & ~HasCycle(3, parity=-1)).check(ctx)
    assert FuncRule(lambda c: len(c.loops) == 3, "three_loops").check(ctx)
    with pytest.raises(ValueError, match="exactly one"):
        HasCycle()


def test_context_caches(example_three):
    ctx = PatternContext(example_three)
    assert ctx.det2 is ctx.det2
    assert ctx.census == {(1, -1): 3, (2, -1): 2, (3, 1): 1}
    assert len(ctx.coincident_pairs) == 4


def test_sign_class_algebra():
    assert SignClass3.NEGATIVE * SignClass3.NEGATIVE is SignClass3.POSITIVE
    assert SignClass3.POSITIVE * SignClass3.ZERO is SignClass3.ZERO
    assert SignClass3.POSITIVE * SignClass3.INDEFINITE is SignClass3.UNKNOWN
    assert -SignClass3.POSITIVE is SignClass3.NEGATIVE
    assert SignClass3.from_sign(-3) is SignClass3.NEGATIVE
    assert Claim.NONNEGATIVE.is_lower_bound and Claim.NEGATIVE.is_upper_bound


def test_sign_of_expression():
    x, y = variables(2)
    assert sign_of_expression(MultiPoly.zero(2)) is SignClass3.ZERO
    assert sign_of_expression(x * y + y) is SignClass3.POSITIVE
    assert sign_of_expression(-x) is SignClass3.NEGATIVE
    assert sign_of_expression(x - y) is SignClass3.INDEFINITE
    assert sign_of_expression(x**2 - x * y + y**2) is SignClass3.UNKNOWN
    assert sign_of_product(-x, x - y) is SignClass3.INDEFINITE
    assert sign_of_product(-x, -y, x + y) is SignClass3.POSITIVE


def test_minor_sums_are_never_unknown():
    rng = random.Random(13)
    for n in (3, 4, 5):
        for _ in range(10):
            for value in minor_sums(random_pattern(rng, n).symbolic_matrix()):
                assert sign_of_expression(value) is not SignClass3.UNKNOWN


def test_example_three(example_three):
    result = classify(example_three)
    assert result.verdict is Verdict.POSITIVE
    assert result.fired("prop33") and result.fired("term_signs")
    assert rule_prop33(example_three).verdict is Verdict.POSITIVE


def test_three_pattern_rule_needs_n3(ex4b):
    with pytest.raises(DimensionError):
        rule_prop33(ex4b)
    with pytest.raises(DimensionError):
        three_pattern_vertex_terms(ex4b)


def test_indefinite_three_pattern():
    opposite_loops = SignPattern.from_rows([[1, 0, 0], [0, -1, 0], [0, 0, 0]])
    result = classify(opposite_loops)
    assert result.verdict is Verdict.INDEFINITE
    assert result.witnesses is not None and result.witnesses.kind == "vertices"
    assert rule_prop33(opposite_loops).evidence[0].data["structures"] == ["opposite_loops"]


def test_two_pattern_census():
    verdicts = []
    for pattern in all_patterns(2):
        result = classify(pattern)
        assert result.verdict is direct_verdict(det2(pattern.symbolic_matrix()))
        verdicts.append(result.verdict)
    assert len(verdicts) == 81
    assert verdicts.count(Verdict.ZERO) == 9
    assert verdicts.count(Verdict.INDEFINITE) == 18


@pytest.mark.slow
def test_three_pattern_census():
    for pattern in all_patterns(3):
        ctx = PatternContext(pattern)
        assert rule_prop33(ctx).verdict is direct_verdict(ctx.det2)
        assert ctx.det2 == qn_of(ctx)
        if ctx.det2.is_zero():
            continue
        expected = MultiPoly(ctx.det2.arity, {tuple(m): c for m, c in three_pattern_vertex_terms(ctx)})
        assert expected == vertex_terms(ctx.det2, ctx.polytope)


def qn_of(ctx: PatternContext) -> MultiPoly:
    j = ctx.minors
    return j[1] * j[2] - j[3]


def test_bipartite_rule(hexagon, example_three):
    evidence = rule_bipartite(hexagon).unwrap()
    assert evidence.claim is Claim.ZERO
    assert evidence.data["vanishing_minor_sums"] == [1, 3, 5]
    assert rule_bipartite(example_three).unwrap_or_none() is None


@pytest.mark.slow
def test_bipartite_pattern_is_zero(hexagon):
    result = classify(hexagon)
    assert result.verdict is Verdict.ZERO
    assert result.fired("bipartite_zero") and result.fired("zero_polynomial")


@pytest.mark.slow
@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_negation_symmetry(n):
    rng = random.Random(17 + n)
    sign = -1 if n % 4 in (2, 3) else 1
    density = 0.5 if n < 6 else 0.3
    for _ in range(50):
        pattern = random_pattern(rng, n, density)
        assert det2(pattern.negate().symbolic_matrix()) == sign * det2(pattern.symbolic_matrix())


def lifted_point(sub, sup, point, epsilon):
    """`point` on the entries of `sub`, `epsilon` on the entries only `sup` has."""
    values = {(i, j): value for (i, j, _), value in zip(sub.entries(), point)}
    return tuple(values.get((i, j), epsilon) for i, j, _ in sup.entries())


def sign_survives(sub, sup, point, sign):
    q = det2(sup.symbolic_matrix())
    return any(
        sign * q.evaluate(lifted_point(sub, sup, point, Fraction(1, 10**k))) > 0 for k in range(1, 60)
    )


@pytest.mark.slow
@pytest.mark.parametrize("n", [4, 5])
def test_indefinite_subpattern_is_inherited(n):
    rng = random.Random(40 + n)
    semidefinite = {
        Verdict.ZERO,
        Verdict.POSITIVE,
        Verdict.NEGATIVE,
        Verdict.NONNEGATIVE_NONZERO,
        Verdict.NONPOSITIVE_NONZERO,
    }
    checked = 0
    for _ in range(80):
        sup = random_pattern(rng, n, 0.45)
        arcs = [(i, j) for i, j, _ in sup.entries()]
        if len(arcs) < 2:
            continue
        sub = sup.subpattern(rng.sample(arcs, rng.randint(1, min(3, len(arcs) - 1))))
        assert sub.is_subpattern_of(sup)
        p = det2(sub.symbolic_matrix())
        if p.is_zero():
            continue
        match indefiniteness_witness(p, 500, seed=n):
            case Some(pair):
                assert sign_survives(sub, sup, pair.positive, 1)
                assert sign_survives(sub, sup, pair.negative, -1)
                assert classify(sup, witness_budget=500, seed=n).verdict not in semidefinite
                checked += 1
            case Nothing():
                continue
    assert checked >= 5


def test_ex4b_property_p(ex4b):
    ctx = PatternContext(ex4b)
    assert HasPropertyP().check(ctx)
    assert len(ctx.det2) == 194
    assert term_census(ctx.det2) == (186, 8)
    evidence = rule_prop44(ctx).unwrap()
    assert evidence.rule_id == "prop44_P"
    assert evidence.data["loops"] == 4
    result = classify(ctx)
    assert result.fired("prop44_P")
    assert result.verdict in (Verdict.POSITIVE, Verdict.NONNEGATIVE_NONZERO)


def test_staged_construction(ex4b):
    stages = staged_construction(ex4b)
    assert [stage.kind for stage in stages[:3]] == ["loops", "disjoint_pair", "disjoint_pair"]
    assert stages[0].added == ((0, 0), (1, 1), (2, 2), (3, 3))
    assert stages[1].added == ((0, 1), (1, 0), (2, 3), (3, 2))
    assert stages[-1].entries == frozenset((i, j) for i, j, _ in ex4b.entries())


def test_disjoint_pair_increment(ex4b):
    stages = staged_construction(ex4b)
    before = stage_matrix(ex4b, stages[0].entries)
    after = stage_matrix(ex4b, stages[1].entries)
    assert det2(after) - det2(before) == disjoint_pair_increment(before, after, (0, 1), (2, 3))


def property_p_patterns(rng, count):
    """Property-P 4-patterns whose second stage adds one pair of disjoint 2-cycles to the loops."""
    splits = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))]
    found = []
    for _ in range(5000):
        signs = [[0] * 4 for _ in range(4)]
        for i in range(4):
            if rng.random() < 0.7:
                signs[i][i] = rng.choice((1, -1))
        for i, j in rng.choice(splits):
            signs[i][j] = rng.choice((1, -1))
            signs[j][i] = rng.choice((1, -1))
        for i, j in itertools.permutations(range(4), 2):
            if not signs[i][j] and rng.random() < 0.15:
                signs[i][j] = rng.choice((1, -1))
        pattern = SignPattern.from_rows(signs)
        if not HasPropertyP().check(PatternContext(pattern)):
            continue
        stages = staged_construction(pattern)
        if len(stages) > 1 and stages[0].kind == "loops" and stages[1].kind == "disjoint_pair":
            found.append((pattern, stages))
            if len(found) == count:
                break
    return found


@pytest.mark.slow
def test_disjoint_pair_increment_on_property_p_patterns():
    samples = property_p_patterns(random.Random(44), 25)
    assert len(samples) == 25
    for pattern, stages in samples:
        before = stage_matrix(pattern, stages[0].entries)
        after = stage_matrix(pattern, stages[1].entries)
        alpha, beta = sorted({tuple(sorted(entry)) for entry in stages[1].added})
        increment = disjoint_pair_increment(before, after, alpha, beta)
        assert det2(after) - det2(before) == increment


def test_four_pattern_rules_need_n4(example_three):
    with pytest.raises(DimensionError):
        rule_prop44(example_three)
    with pytest.raises(DimensionError):
        rule_q4_minor_signs(example_three)


def test_ex4c_minor_signs(ex4c):
    evidence = rule_q4_minor_signs(ex4c).unwrap()
    assert evidence.claim is Claim.NEGATIVE
    assert classify(ex4c).verdict is Verdict.NEGATIVE


def test_exnz(exnz):
    ctx = PatternContext(exnz)
    assert is_indef2_case(ctx.det2)
    result = classify(ctx)
    assert result.verdict is Verdict.NONPOSITIVE_NONZERO
    assert result.fired("q4_minor_signs")


def test_exmixed(exmixed):
    assert classify(exmixed).verdict is Verdict.NEGATIVE


def test_exbasic(exbasic):
    ctx = PatternContext(exbasic)
    assert term_census(ctx.det2) == (3, 38)
    assert ctx.det2.degree == 10
    fired = [e.rule_id for e in rule_five_pattern_lemmas(ctx)]
    assert "lem5pat1" in fired
    result = classify(ctx)
    assert result.verdict is Verdict.NEGATIVE
    assert result.fired("lem5pat1")


def test_exharder(exharder):
    ctx = PatternContext(exharder)
    assert term_census(ctx.det2) == (13, 91)
    j = ctx.minors
    assert sign_of_expression(j[1] * j[4] - j[2] * j[3]) is SignClass3.POSITIVE
    result = classify(ctx)
    assert result.fired("lem5pat3")
    assert result.verdict in (Verdict.NEGATIVE, Verdict.NONPOSITIVE_NONZERO)


@pytest.mark.slow
def test_exharder_spot_checks(exharder):
    value = det2(exharder.symbolic_matrix())
    rng = random.Random(0)
    assert all(value.evaluate(random_positive_point(rng, value.arity)) <= 0 for _ in range(1000))


def test_five_pattern_lemmas_need_n5(ex4b):
    with pytest.raises(DimensionError):
        rule_five_pattern_lemmas(ex4b)
    assert rule_five_pattern_lemmas(SignPattern.zero(5)) == []


def test_classify_needs_n2():
    with pytest.raises(DimensionError):
        classify(SignPattern.from_rows([[1]]))


def test_classify_det2():
    x, y = variables(2)
    assert classify_det2(MultiPoly.zero(2)).verdict is Verdict.ZERO
    assert classify_det2(x + y).verdict is Verdict.POSITIVE
    mixed = classify_det2(x**2 - y**2)
    assert mixed.verdict is Verdict.INDEFINITE
    assert mixed.witnesses.kind == "vertices"
    indef2 = classify_det2(x**2 - 3 * x * y + y**2, witness_budget=1000)
    assert indef2.verdict is Verdict.INDEFINITE
    assert indef2.witnesses.kind == "points"
    assert indef2.fired("witness_pair")
    assert classify_det2(x**2 - x * y + y**2, witness=False).verdict is Verdict.UNRESOLVED


def test_classify_is_seeded(exharder):
    first = classify(exharder, seed=4)
    assert first == classify(exharder, seed=4)


def test_vertex_terms_of_three_pattern(example_three):
    ctx = PatternContext(example_three)
    expected = MultiPoly(ctx.det2.arity, {tuple(m): c for m, c in three_pattern_vertex_terms(ctx)})
    assert expected == vertex_terms(ctx.det2, newton_polytope(ctx.det2))
