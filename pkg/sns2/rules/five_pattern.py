import dataclasses
import typing

from sns2.error import DimensionError
from sns2.modules import logger
from sns2.poly.multipoly import MultiPoly
from sns2.rules.context import ContextLike, as_context
from sns2.rules.sign import sign_of_product
from sns2.rules.verdict import Claim, Evidence, SignClass3

POSITIVE, NEGATIVE = SignClass3.POSITIVE, SignClass3.NEGATIVE


@dataclasses.dataclass(frozen=True, slots=True)
class FivePatternLemma:
    """Sign hypotheses on minor-sum expressions that force a sign of q5."""

    rule_id: str
    statement: str
    claim: Claim
    alternatives: tuple[tuple[tuple[str, SignClass3], ...], ...]


LEMMAS: typing.Final[tuple[FivePatternLemma, ...]] = (
    FivePatternLemma(
        rule_id="lem5pat1",
        statement="J4 > 0 and (J1 > 0, J5 > 0, J2*J3 < 0 or J1 < 0, J5 < 0, J2*J3 > 0) imply q5 < 0",
        claim=Claim.NEGATIVE,
        alternatives=(
            (("J4", POSITIVE), ("J1", POSITIVE), ("J5", POSITIVE), ("J2*J3", NEGATIVE)),
            (("J4", POSITIVE), ("J1", NEGATIVE), ("J5", NEGATIVE), ("J2*J3", POSITIVE)),
        ),
    ),
    FivePatternLemma(
        rule_id="lem5pat2",
        statement="J1*J2*J3 > 0, J4 > 0 and J1*(J5 - J2*J3) > 0 imply q5 <= 0",
        claim=Claim.NONPOSITIVE,
        alternatives=((("J1*J2*J3", POSITIVE), ("J4", POSITIVE), ("J1*(J5 - J2*J3)", POSITIVE)),),
    ),
    FivePatternLemma(
        rule_id="lem5pat3",
        statement="J1*J2*J3 > 0, J1*J5 > 0 and J1*(J1*J4 - J2*J3) > 0 imply q5 <= 0",
        claim=Claim.NONPOSITIVE,
        alternatives=((("J1*J2*J3", POSITIVE), ("J1*J5", POSITIVE), ("J1*(J1*J4 - J2*J3)", POSITIVE)),),
    ),
)


def hypothesis_factors(j: typing.Callable[[int], MultiPoly]) -> dict[str, tuple[MultiPoly, ...]]:
    """Every expression the lemmas test, as a product of exact factors."""
    return {
        "J1": (j(1),),
        "J4": (j(4),),
        "J5": (j(5),),
        "J2*J3": (j(2), j(3)),
        "J1*J2*J3": (j(1), j(2), j(3)),
        "J1*J5": (j(1), j(5)),
        "J1*(J5 - J2*J3)": (j(1), j(5) - j(2) * j(3)),
        "J1*(J1*J4 - J2*J3)": (j(1), j(1) * j(4) - j(2) * j(3)),
    }


def rule_five_pattern_lemmas(pattern: ContextLike) -> list[Evidence]:
    """Every lemma whose hypotheses all resolve to the required strict sign."""
    ctx = as_context(pattern)
    if ctx.n != 5:
        raise DimensionError(f"The 5-pattern lemmas need n = 5, got n = {ctx.n}.")
    factors = hypothesis_factors(ctx.minors.get)
    budget = min(ctx.witness_budget, 256)
    signs: dict[str, SignClass3] = {}

    def sign(name: str) -> SignClass3:
        if name not in signs:
            signs[name] = sign_of_product(*factors[name], budget=budget, seed=ctx.seed)
        return signs[name]

    findings: list[Evidence] = []
    for lemma in LEMMAS:
        for alternative in lemma.alternatives:
            if all(sign(name) is required for name, required in alternative):
                logger.info("{} fired: det2 {}", lemma.rule_id, lemma.claim.value)
                findings.append(
                    Evidence(
                        rule_id=lemma.rule_id,
                        statement=lemma.statement,
                        claim=lemma.claim,
                        data={name: sign(name).value for name, _ in alternative},
                    )
                )
                break
    return findings


__all__ = ("LEMMAS", "FivePatternLemma", "hypothesis_factors", "rule_five_pattern_lemmas")
