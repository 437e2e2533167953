import enum
import typing

import msgspec

from sns2.model import Model


class Verdict(str, enum.Enum):
    ZERO = "Zero"
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    NONNEGATIVE_NONZERO = "NonnegativeNonzero"
    NONPOSITIVE_NONZERO = "NonpositiveNonzero"
    INDEFINITE = "Indefinite"
    UNRESOLVED = "Unresolved"


class SignClass3(str, enum.Enum):
    """Sign of a polynomial on the open positive orthant, as far as it is known."""

    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    ZERO = "Zero"
    INDEFINITE = "Indefinite"
    UNKNOWN = "Unknown"

    @classmethod
    def from_sign(cls, sign: int) -> "SignClass3":
        return cls.ZERO if not sign else cls.POSITIVE if sign > 0 else cls.NEGATIVE

    @property
    def is_strict(self) -> bool:
        return self in (SignClass3.POSITIVE, SignClass3.NEGATIVE)

    def __neg__(self) -> "SignClass3":
        match self:
            case SignClass3.POSITIVE:
                return SignClass3.NEGATIVE
            case SignClass3.NEGATIVE:
                return SignClass3.POSITIVE
            case _:
                return self

    def __mul__(self, other: "SignClass3") -> "SignClass3":
        if SignClass3.ZERO in (self, other):
            return SignClass3.ZERO
        if self.is_strict and other.is_strict:
            return SignClass3.POSITIVE if self is other else SignClass3.NEGATIVE
        return SignClass3.UNKNOWN


class Claim(str, enum.Enum):
    """What a piece of evidence says about `det2` on the positive orthant."""

    ZERO = "= 0"
    POSITIVE = "> 0"
    NEGATIVE = "< 0"
    NONNEGATIVE = ">= 0"
    NONPOSITIVE = "<= 0"
    NOT_NONNEGATIVE = "not >= 0"
    NOT_NONPOSITIVE = "not <= 0"
    INDEFINITE = "indefinite"

    @property
    def is_lower_bound(self) -> bool:
        return self in (Claim.POSITIVE, Claim.NONNEGATIVE)

    @property
    def is_upper_bound(self) -> bool:
        return self in (Claim.NEGATIVE, Claim.NONPOSITIVE)

    @property
    def is_exclusion(self) -> bool:
        return self in (Claim.NOT_NONNEGATIVE, Claim.NOT_NONPOSITIVE)


class Evidence(Model):
    """One fired rule. `statement` names the result the rule relies on."""

    rule_id: str
    statement: str
    claim: Claim
    data: dict[str, typing.Any] = msgspec.field(default_factory=dict)


class Witnesses(Model):
    """Either two positive rational points (`"p/q"` coordinates) of opposite sign,
    or two Newton-polytope vertex terms of opposite sign (monomial texts)."""

    kind: typing.Literal["points", "vertices"]
    positive: list[str]
    negative: list[str]


class Classification2(Model):
    verdict: Verdict
    evidence: list[Evidence] = msgspec.field(default_factory=list)
    witnesses: Witnesses | None = None

    @property
    def rule_ids(self) -> list[str]:
        return [e.rule_id for e in self.evidence]

    def fired(self, rule_id: str) -> bool:
        return any(e.rule_id == rule_id for e in self.evidence)


def sort_evidence(evidence: typing.Iterable[Evidence]) -> list[Evidence]:
    return sorted(evidence, key=lambda e: (e.rule_id, e.claim.value, e.statement))


__all__ = ("Claim", "Classification2", "Evidence", "SignClass3", "Verdict", "Witnesses", "sort_evidence")
