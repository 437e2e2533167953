import dataclasses
import random
import typing

from sns2.certs.certificate import ConeCertificate, cone_sum
from sns2.modules import logger
from sns2.poly.multipoly import MultiPoly
from sns2.polytope.witness import Point, random_positive_point

DEFAULT_SPOT_CHECKS: typing.Final[int] = 100


@dataclasses.dataclass(frozen=True, slots=True)
class CertificateCheck:
    """Outcome of `verify_certificate`.

    `residual` is `scale^2 * (sign * multiplier * target) - scale^2 * sum(terms)`, exact;
    it is zero iff the identity holds. Without a multiplier decomposition the multiplier
    must be nonnegative at every sampled point and positive at one of them.
    """

    residual: MultiPoly
    scale: int
    multiplier_residual: MultiPoly | None
    multiplier_nonzero: bool
    multiplier_sampled_positive: bool = True
    sign_violations: tuple[Point, ...] = ()

    def __repr__(self) -> str:
        return "<CertificateCheck: {}>".format("pass" if self.passed else "fail")

    @property
    def identity_holds(self) -> bool:
        return self.residual.is_zero()

    @property
    def multiplier_verified(self) -> bool:
        """The multiplier is a nonzero member of the cone, with its own decomposition checked."""
        residual = self.multiplier_residual
        return self.multiplier_nonzero and residual is not None and residual.is_zero()

    @property
    def multiplier_accepted(self) -> bool:
        if self.multiplier_residual is not None:
            return self.multiplier_verified
        return self.multiplier_nonzero and self.multiplier_sampled_positive

    @property
    def passed(self) -> bool:
        return self.identity_holds and self.multiplier_accepted and not self.sign_violations


def _multiplier_sampled_positive(multiplier: MultiPoly, samples: int, seed: int) -> bool:
    rng = random.Random(seed)
    values = [multiplier.evaluate(random_positive_point(rng, multiplier.arity)) for _ in range(max(samples, 1))]
    return min(values) >= 0 and max(values) > 0


def verify_certificate(
    certificate: ConeCertificate,
    *,
    samples: int = DEFAULT_SPOT_CHECKS,
    seed: int = 0,
) -> CertificateCheck:
    """Check `sign * multiplier * target == sum(weight * sqrt^2 * X^m)` exactly, then spot-check
    the claimed sign of the target at `samples` seeded positive points."""
    arity = certificate.arity
    decomposition, scale = cone_sum(certificate.terms, arity)
    product = certificate.multiplier * certificate.target * (certificate.claim.sign * scale * scale)
    residual = product - decomposition

    multiplier_residual = None
    sampled_positive = True
    if certificate.multiplier_terms is not None:
        multiplier_sum, multiplier_scale = cone_sum(certificate.multiplier_terms, arity)
        multiplier_residual = certificate.multiplier * (multiplier_scale * multiplier_scale) - multiplier_sum
    else:
        sampled_positive = _multiplier_sampled_positive(certificate.multiplier, samples, seed)

    check = CertificateCheck(
        residual=residual,
        scale=scale,
        multiplier_residual=multiplier_residual,
        multiplier_nonzero=not certificate.multiplier.is_zero(),
        multiplier_sampled_positive=sampled_positive,
        sign_violations=tuple(spot_check(certificate, samples, seed)),
    )
    name = certificate.name or "<unnamed>"
    if check.passed:
        logger.info("Certificate {} verified ({} terms)", name, len(certificate.terms))
    elif not check.identity_holds:
        logger.warning("Certificate {} failed: residual has {} terms", name, len(residual))
    else:
        logger.warning(
            "Certificate {} failed: multiplier accepted {}, {} sign violations",
            name,
            check.multiplier_accepted,
            len(check.sign_violations),
        )
    return check


def spot_check(
    certificate: ConeCertificate,
    samples: int = DEFAULT_SPOT_CHECKS,
    seed: int = 0,
) -> list[Point]:
    """Exact evaluations at seeded positive rational points; returns the points where the claimed sign fails."""
    rng = random.Random(seed)
    sign = certificate.claim.sign
    violations: list[Point] = []
    for _ in range(samples):
        point = random_positive_point(rng, certificate.arity)
        value = certificate.target.evaluate(point) * sign
        if value < 0 or (certificate.claim.is_strict and value == 0):
            violations.append(point)
    return violations


__all__ = ("DEFAULT_SPOT_CHECKS", "CertificateCheck", "spot_check", "verify_certificate")
