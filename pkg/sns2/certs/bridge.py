import dataclasses
import enum

from sns2.certs.certificate import load_bundled
from sns2.compound.minor_sums import MinorSums, qn_from_minor_sums
from sns2.error import DimensionError, InconsistencyError
from sns2.modules import logger
from sns2.poly.multipoly import MultiPoly

type Substitutions = tuple[MultiPoly, MultiPoly, MultiPoly, MultiPoly]


class BridgeScheme(str, enum.Enum):
    """Which 5-pattern lemma the substitution belongs to."""

    LEMMA2 = "lemma2"
    LEMMA3 = "lemma3"


@dataclasses.dataclass(frozen=True, slots=True)
class SubstitutionBridge:
    """`denominator * q5 == polynomial(alpha, beta, gamma, delta)` with the substitutions in J."""

    scheme: BridgeScheme
    polynomial: MultiPoly
    denominator: MultiPoly
    substitutions: Substitutions
    qn: MultiPoly

    def __repr__(self) -> str:
        return "<SubstitutionBridge: {}>".format(self.scheme.value)

    @property
    def lhs(self) -> MultiPoly:
        return self.denominator * self.qn

    @property
    def rhs(self) -> MultiPoly:
        return self.polynomial.compose(list(self.substitutions))

    def holds(self) -> bool:
        return self.lhs == self.rhs


def bridge_substitutions(minors: MinorSums, scheme: BridgeScheme) -> Substitutions:
    j = minors.get
    alpha = j(1) * j(2) * j(3)
    delta = j(3) ** 2
    match scheme:
        case BridgeScheme.LEMMA2:
            return alpha, j(1) * (j(5) - j(2) * j(3)), j(1) ** 2 * j(4), delta
        case BridgeScheme.LEMMA3:
            return alpha, j(1) * (j(1) * j(4) - j(2) * j(3)), j(1) * j(5), delta


def substitution_bridge(minors: MinorSums, scheme: BridgeScheme | str) -> SubstitutionBridge:
    """Rewrite `J1^2 * J3^2 * q5` as a polynomial in four expressions of the minor-sums.

    The polynomial is the target of the bundled certificate for the same scheme;
    the identity is checked by expansion before returning.
    """
    scheme = BridgeScheme(scheme)
    if minors.n != 5:
        raise DimensionError(f"The substitution bridge is defined for n = 5, got n = {minors.n}.")
    bridge = SubstitutionBridge(
        scheme=scheme,
        polynomial=load_bundled(scheme.value).target,
        denominator=minors.get(1) ** 2 * minors.get(3) ** 2,
        substitutions=bridge_substitutions(minors, scheme),
        qn=qn_from_minor_sums(minors),
    )
    if not bridge.holds():
        raise InconsistencyError(
            f"bridge_{scheme.value}",
            "J1^2 * J3^2 * q5 differs from the substituted polynomial",
            {"residual_terms": len(bridge.lhs - bridge.rhs)},
        )
    logger.debug("Substitution bridge {} holds for arity {}", scheme.value, minors.arity)
    return bridge


__all__ = ("BridgeScheme", "SubstitutionBridge", "Substitutions", "bridge_substitutions", "substitution_bridge")
