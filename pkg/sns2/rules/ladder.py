import typing

from fntypes.option import Nothing, Option, Some

from sns2.config import DEFAULT_WITNESS_BUDGET
from sns2.error import DimensionError, InconsistencyError
from sns2.modules import logger
from sns2.poly.multipoly import MultiPoly, has_mixed_terms, term_census
from sns2.polytope.newton import NewtonPolytope, mixed_vertices, mixed_vertices_certificate, newton_polytope
from sns2.polytope.witness import indefiniteness_witness
from sns2.rules.bipartite import rule_bipartite
from sns2.rules.context import ContextLike, PatternContext, as_context
from sns2.rules.five_pattern import rule_five_pattern_lemmas
from sns2.rules.four_pattern import rule_prop44, rule_q4_minor_signs
from sns2.rules.obstructions import rule_cycle_obstructions
from sns2.rules.three_pattern import rule_prop33
from sns2.rules.verdict import Claim, Classification2, Evidence, Verdict, Witnesses, sort_evidence

VERDICT_CLAIMS: typing.Final[dict[Verdict, Claim]] = {
    Verdict.ZERO: Claim.ZERO,
    Verdict.POSITIVE: Claim.POSITIVE,
    Verdict.NEGATIVE: Claim.NEGATIVE,
    Verdict.NONNEGATIVE_NONZERO: Claim.NONNEGATIVE,
    Verdict.NONPOSITIVE_NONZERO: Claim.NONPOSITIVE,
    Verdict.INDEFINITE: Claim.INDEFINITE,
}
TERM_SIGNS_STATEMENT: typing.Final[str] = (
    "a nonzero polynomial whose terms share one sign is definite on the positive orthant"
)
MIXED_VERTICES_STATEMENT: typing.Final[str] = (
    "vertex terms of both signs make a polynomial indefinite on the positive orthant"
)
CLAIM_VERDICTS: typing.Final[dict[Claim, Verdict]] = {claim: verdict for verdict, claim in VERDICT_CLAIMS.items()}
# Strongest conclusion first.
CONCLUSION_ORDER: typing.Final[tuple[Claim, ...]] = (
    Claim.POSITIVE,
    Claim.NEGATIVE,
    Claim.NONNEGATIVE,
    Claim.NONPOSITIVE,
)


def is_indef2_case(p: MultiPoly, polytope: NewtonPolytope | None = None) -> bool:
    """Mixed terms, but every vertex term has the same sign."""
    return not p.is_zero() and has_mixed_terms(p) and not mixed_vertices(p, polytope)


def _exact_step(p: MultiPoly, polytope: typing.Callable[[], NewtonPolytope]) -> Option[Classification2]:
    """Ladder steps that need no lemma: zero, one-signed terms, mixed vertices."""
    if p.is_zero():
        return Some(
            Classification2(
                verdict=Verdict.ZERO,
                evidence=[
                    Evidence(rule_id="zero_polynomial", statement="det2 is the zero polynomial", claim=Claim.ZERO),
                ],
            )
        )
    positive, negative = term_census(p)
    if not (positive and negative):
        claim = Claim.POSITIVE if positive else Claim.NEGATIVE
        return Some(
            Classification2(
                verdict=CLAIM_VERDICTS[claim],
                evidence=[
                    Evidence(
                        rule_id="term_signs",
                        statement=TERM_SIGNS_STATEMENT,
                        claim=claim,
                        data={"positive_terms": positive, "negative_terms": negative},
                    )
                ],
            )
        )
    match mixed_vertices_certificate(p, polytope()):
        case Some(mixed):
            return Some(
                Classification2(
                    verdict=Verdict.INDEFINITE,
                    evidence=[
                        Evidence(
                            rule_id="mixed_vertices",
                            statement=MIXED_VERTICES_STATEMENT,
                            claim=Claim.INDEFINITE,
                            data={
                                "positive_vertex": mixed.positive.monomial.to_text(),
                                "negative_vertex": mixed.negative.monomial.to_text(),
                                "positive_direction": list(mixed.positive.direction),
                                "negative_direction": list(mixed.negative.direction),
                            },
                        )
                    ],
                    witnesses=Witnesses(
                        kind="vertices",
                        positive=[mixed.positive.monomial.to_text()],
                        negative=[mixed.negative.monomial.to_text()],
                    ),
                )
            )
    return Nothing()


def _witness_step(
    p: MultiPoly,
    polytope: NewtonPolytope,
    budget: int,
    seed: int,
    evidence: list[Evidence],
) -> Classification2:
    match indefiniteness_witness(p, budget, seed, polytope=polytope):
        case Some(pair):
            logger.info("witness_pair found for det2 with {} terms", len(p))
            return Classification2(
                verdict=Verdict.INDEFINITE,
                evidence=sort_evidence(
                    [
                        *evidence,
                        Evidence(
                            rule_id="witness_pair",
                            statement="exact evaluations of opposite sign at two positive rational points",
                            claim=Claim.INDEFINITE,
                            data={"positive_value": pair.positive_value, "negative_value": pair.negative_value},
                        ),
                    ]
                ),
                witnesses=Witnesses(kind="points", **pair.to_strings()),
            )
    if any(e.claim is Claim.NOT_NONNEGATIVE for e in evidence) and any(
        e.claim is Claim.NOT_NONPOSITIVE for e in evidence
    ):
        logger.warning("det2 is excluded from both semidefinite classes but no witness pair was found")
    return Classification2(verdict=Verdict.UNRESOLVED, evidence=sort_evidence(evidence))


def classify_det2(
    p: MultiPoly,
    *,
    witness_budget: int = DEFAULT_WITNESS_BUDGET,
    seed: int = 0,
    witness: bool = True,
) -> Classification2:
    """Generic ladder for any polynomial matrix: zero, term signs, mixed vertices, witness search."""
    cache: dict[str, NewtonPolytope] = {}

    def polytope() -> NewtonPolytope:
        if "polytope" not in cache:
            cache["polytope"] = newton_polytope(p)
        return cache["polytope"]

    match _exact_step(p, polytope):
        case Some(result):
            return result
    if not witness:
        return Classification2(verdict=Verdict.UNRESOLVED)
    return _witness_step(p, polytope(), witness_budget, seed, [])


def _check_exclusions(verdict: Verdict, evidence: list[Evidence]) -> None:
    lower = verdict in (Verdict.ZERO, Verdict.POSITIVE, Verdict.NONNEGATIVE_NONZERO)
    upper = verdict in (Verdict.ZERO, Verdict.NEGATIVE, Verdict.NONPOSITIVE_NONZERO)
    for e in evidence:
        if (e.claim is Claim.NOT_NONNEGATIVE and lower) or (e.claim is Claim.NOT_NONPOSITIVE and upper):
            raise InconsistencyError(
                e.rule_id,
                f"det2 is {verdict.value} but the rule says {e.claim.value}",
                e.data,
            )


def _check_against_vertices(ctx: PatternContext, conclusions: list[Evidence]) -> None:
    sign = ctx.vertex_sign()
    for e in conclusions:
        if (e.claim.is_lower_bound and sign < 0) or (e.claim.is_upper_bound and sign > 0):
            raise InconsistencyError(
                e.rule_id,
                f"concluded det2 {e.claim.value} but a vertex term of sign {sign:+d} dominates",
                e.data,
            )


def classify(
    pattern: ContextLike,
    *,
    witness_budget: int | None = None,
    seed: int | None = None,
    witness: bool = True,
) -> Classification2:
    """Classify `det2` of a sign pattern on the open positive orthant.

    Exact facts come first (zero polynomial, one-signed terms, mixed vertices); the
    3-pattern classification, the 4- and 5-pattern criteria and the obstructions follow;
    then a witness search. A lemma that contradicts an exact fact raises
    `InconsistencyError`.
    """
    ctx = as_context(pattern)
    if witness_budget is not None or seed is not None:
        ctx = PatternContext(
            ctx.pattern,
            witness_budget=ctx.witness_budget if witness_budget is None else witness_budget,
            seed=ctx.seed if seed is None else seed,
        )
    if ctx.n < 2:
        raise DimensionError(f"det2 needs n >= 2, got n = {ctx.n}.")

    side_evidence: list[Evidence] = []
    match rule_bipartite(ctx):
        case Some(bipartite):
            if not ctx.det2.is_zero():
                raise InconsistencyError(
                    "bipartite_zero",
                    "det2 is nonzero for a digraph without odd cycles",
                )
            side_evidence.append(bipartite)
    exclusions = rule_cycle_obstructions(ctx)
    side_evidence.extend(exclusions)

    match _exact_step(ctx.det2, lambda: ctx.polytope):
        case Some(exact):
            evidence = [*exact.evidence, *side_evidence]
            if ctx.n == 3:
                structural = rule_prop33(ctx)
                if structural.verdict is not exact.verdict:
                    raise InconsistencyError(
                        "prop33",
                        f"cycle structure gives {structural.verdict.value}, det2 is {exact.verdict.value}",
                    )
                evidence.extend(structural.evidence)
            _check_exclusions(exact.verdict, evidence)
            return Classification2(
                verdict=exact.verdict,
                evidence=sort_evidence(evidence),
                witnesses=exact.witnesses,
            )

    conclusions: list[Evidence] = []
    if ctx.n == 4:
        for found in (rule_prop44(ctx), rule_q4_minor_signs(ctx)):
            match found:
                case Some(e):
                    conclusions.append(e)
    elif ctx.n == 5:
        conclusions.extend(rule_five_pattern_lemmas(ctx))
    _check_against_vertices(ctx, conclusions)
    evidence = [*conclusions, *side_evidence]

    claims = {e.claim for e in conclusions}
    for claim in CONCLUSION_ORDER:
        if claim in claims:
            verdict = {
                Claim.POSITIVE: Verdict.POSITIVE,
                Claim.NEGATIVE: Verdict.NEGATIVE,
                Claim.NONNEGATIVE: Verdict.NONNEGATIVE_NONZERO,
                Claim.NONPOSITIVE: Verdict.NONPOSITIVE_NONZERO,
            }[claim]
            _check_exclusions(verdict, evidence)
            return Classification2(verdict=verdict, evidence=sort_evidence(evidence))

    if not witness:
        return Classification2(verdict=Verdict.UNRESOLVED, evidence=sort_evidence(evidence))
    return _witness_step(ctx.det2, ctx.polytope, ctx.witness_budget, ctx.seed, evidence)


__all__ = ("CLAIM_VERDICTS", "VERDICT_CLAIMS", "classify", "classify_det2", "is_indef2_case")
