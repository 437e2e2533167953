import dataclasses
import enum
import importlib.resources
import math
import typing
from fractions import Fraction

import fntypes.result
import msgspec
from fntypes.result import Error, Ok

from sns2.error import ArityMismatchError, CertificateError, SNS2Error
from sns2.model import IntTerm, Model, RationalTerm
from sns2.poly.monomial import Monomial
from sns2.poly.multipoly import MultiPoly

BUNDLED_CERTIFICATES: typing.Final[tuple[str, ...]] = ("lemma2", "lemma3")


class CertificateClaim(str, enum.Enum):
    NONNEGATIVE = "nonneg"
    NONPOSITIVE = "nonpos"
    STRICT_POSITIVE = "strict-pos"
    STRICT_NEGATIVE = "strict-neg"

    @property
    def sign(self) -> int:
        """`+1` when the target itself is decomposed, `-1` when its negation is."""
        return 1 if self in (CertificateClaim.NONNEGATIVE, CertificateClaim.STRICT_POSITIVE) else -1

    @property
    def is_strict(self) -> bool:
        return self in (CertificateClaim.STRICT_POSITIVE, CertificateClaim.STRICT_NEGATIVE)


class ConeTermFile(Model):
    sqrt: list[RationalTerm]
    monomial: list[int]
    weight: int = 1


class CertificateFile(Model):
    """Certificate JSON.

    `multiplier * target` (negated for `nonpos` and `strict-neg`) must equal the sum
    of `weight * sqrt^2 * X^monomial` over `terms`. `multiplier_terms`, when given,
    decomposes the multiplier the same way.
    """

    arity: int
    claim: CertificateClaim
    target: list[IntTerm]
    multiplier: list[IntTerm]
    terms: list[ConeTermFile]
    multiplier_terms: list[ConeTermFile] | None = None
    name: str | None = None


@dataclasses.dataclass(frozen=True, slots=True)
class ConeTerm:
    """`weight * (square_root / denominator)^2 * X^monomial`; a positive weight keeps it in the cone."""

    square_root: MultiPoly
    monomial: Monomial
    weight: int = 1
    denominator: int = 1

    def __post_init__(self) -> None:
        if self.weight < 1:
            raise CertificateError(f"Term weight must be a positive integer, got {self.weight}.")
        if self.denominator < 1:
            raise CertificateError(f"Term denominator must be positive, got {self.denominator}.")
        if len(self.monomial) != self.square_root.arity:
            raise ArityMismatchError(self.square_root.arity, len(self.monomial))

    @classmethod
    def from_file(cls, file: ConeTermFile, arity: int) -> typing.Self:
        square_root, denominator = MultiPoly.from_rational_terms(file.sqrt, arity)
        return cls(
            square_root=square_root,
            monomial=Monomial(file.monomial),
            weight=file.weight,
            denominator=denominator,
        )

    def to_file(self) -> ConeTermFile:
        return ConeTermFile(
            sqrt=[(Fraction(c, self.denominator), e) for c, e in self.square_root.to_terms()],
            monomial=list(self.monomial),
            weight=self.weight,
        )

    @property
    def is_positive_constant(self) -> bool:
        return not any(self.monomial) and self.square_root.is_constant() and not self.square_root.is_zero()

    def scaled(self, scale: int) -> MultiPoly:
        """The term times `scale^2`; `scale` must be a multiple of the denominator."""
        factor = scale // self.denominator
        arity = self.square_root.arity
        return (
            self.square_root**2
            * MultiPoly(arity, {tuple(self.monomial): 1})
            * (self.weight * factor * factor)
        )


def cone_scale(terms: typing.Iterable[ConeTerm]) -> int:
    return math.lcm(1, *(term.denominator for term in terms))


def cone_sum(terms: typing.Sequence[ConeTerm], arity: int) -> tuple[MultiPoly, int]:
    """`(scale^2 * sum of the terms, scale)` with integer coefficients."""
    scale = cone_scale(terms)
    total = MultiPoly.zero(arity)
    for term in terms:
        total = total + term.scaled(scale)
    return total, scale


def _check_terms(terms: typing.Sequence[ConeTerm], arity: int, what: str) -> None:
    if not terms:
        raise CertificateError(f"The {what} decomposition is empty.")
    for term in terms:
        if term.square_root.arity != arity:
            raise ArityMismatchError(arity, term.square_root.arity)


@dataclasses.dataclass(frozen=True, slots=True)
class ConeCertificate:
    """Witness that `target` has the sign named by `claim` on the open positive orthant.

    ```
    cert = load_bundled("lemma2")
    verify_certificate(cert).passed  #> True
    ```
    """

    target: MultiPoly
    multiplier: MultiPoly
    terms: tuple[ConeTerm, ...]
    claim: CertificateClaim
    multiplier_terms: tuple[ConeTerm, ...] | None = None
    name: str | None = None

    def __post_init__(self) -> None:
        arity = self.target.arity
        if self.multiplier.arity != arity:
            raise ArityMismatchError(arity, self.multiplier.arity)
        _check_terms(self.terms, arity, "target")
        if self.multiplier_terms is not None:
            _check_terms(self.multiplier_terms, arity, "multiplier")
        if self.claim.is_strict and not any(term.is_positive_constant for term in self.terms):
            raise CertificateError(
                f"A {self.claim.value!r} certificate needs a term with a nonzero constant square root"
                " and monomial 1."
            )

    def __repr__(self) -> str:
        return "<ConeCertificate: {}claim={}, arity={}, terms={}>".format(
            f"{self.name}, " if self.name else "",
            self.claim.value,
            self.arity,
            len(self.terms),
        )

    @property
    def arity(self) -> int:
        return self.target.arity

    @classmethod
    def from_file(cls, file: CertificateFile) -> typing.Self:
        return cls(
            target=MultiPoly.from_terms(file.target, file.arity),
            multiplier=MultiPoly.from_terms(file.multiplier, file.arity),
            terms=tuple(ConeTerm.from_file(term, file.arity) for term in file.terms),
            claim=file.claim,
            multiplier_terms=(
                None
                if file.multiplier_terms is None
                else tuple(ConeTerm.from_file(term, file.arity) for term in file.multiplier_terms)
            ),
            name=file.name,
        )

    @classmethod
    def from_json(cls, raw: str | bytes) -> fntypes.result.Result[typing.Self, str]:
        match CertificateFile.try_from_raw(raw):
            case Ok(file):
                try:
                    return Ok(cls.from_file(file))
                except (SNS2Error, ValueError, TypeError) as exc:
                    return Error(str(exc))
            case Error(err):
                return Error(err)

    def to_file(self) -> CertificateFile:
        return CertificateFile(
            arity=self.arity,
            claim=self.claim,
            target=self.target.to_terms(),
            multiplier=self.multiplier.to_terms(),
            terms=[term.to_file() for term in self.terms],
            multiplier_terms=(
                None if self.multiplier_terms is None else [term.to_file() for term in self.multiplier_terms]
            ),
            name=self.name,
        )

    def perturbed(self, index: int, delta: int = 1) -> "ConeCertificate":
        """Copy with the `index`-th target coefficient (graded-lex order) shifted by `delta`."""
        monomial, _ = self.target.sorted_terms()[index]
        bump = MultiPoly(self.arity, {tuple(monomial): delta})
        return dataclasses.replace(self, target=self.target + bump)


def load_bundled(name: str) -> ConeCertificate:
    """Load one of the certificates shipped in `sns2/certs/bundled`."""
    if name not in BUNDLED_CERTIFICATES:
        raise CertificateError(
            "Unknown bundled certificate {!r}, expected one of {}.".format(name, ", ".join(BUNDLED_CERTIFICATES))
        )
    raw = importlib.resources.files("sns2.certs.bundled").joinpath(f"{name}.cert.json").read_bytes()
    try:
        return ConeCertificate.from_file(CertificateFile.from_raw(raw))
    except (msgspec.ValidationError, msgspec.DecodeError) as exc:
        raise CertificateError(f"Bundled certificate {name!r} is malformed: {exc}") from exc


__all__ = (
    "BUNDLED_CERTIFICATES",
    "CertificateClaim",
    "CertificateFile",
    "ConeCertificate",
    "ConeTerm",
    "ConeTermFile",
    "cone_scale",
    "cone_sum",
    "load_bundled",
)
