import dataclasses

from sns2.compound.minor_sums import MinorSums, qn_from_minor_sums
from sns2.error import DimensionError, InconsistencyError, ResultantUndefinedError
from sns2.poly.determinant import determinant
from sns2.poly.matrix import PolyMatrix
from sns2.poly.multipoly import MultiPoly


@dataclasses.dataclass(frozen=True, slots=True)
class BivariatePair:
    """Even and odd parts of `det(M + mu*I)`, stored in `t = mu^2`.

    `phat[k]` and `qhat[k]` are the coefficients of `mu^(2k)` in
    `P = J_n + mu^2 J_{n-2} + ...` and `Q = J_{n-1} + mu^2 J_{n-3} + ...`,
    so that `det(M + mu*I) = P(mu) + mu*Q(mu)`. The tuple lengths fix the
    formal degrees used in the Sylvester matrix.
    """

    arity: int
    phat: tuple[MultiPoly, ...]
    qhat: tuple[MultiPoly, ...]

    @property
    def phat_degree(self) -> int:
        return len(self.phat) - 1

    @property
    def qhat_degree(self) -> int:
        return len(self.qhat) - 1

    def to_text(self, prefix: str = "J") -> tuple[str, str]:
        return _mu_text(self.phat, prefix), _mu_text(self.qhat, prefix)


def _mu_text(coefficients: tuple[MultiPoly, ...], prefix: str) -> str:
    chunks = []
    for k, coefficient in enumerate(coefficients):
        if not coefficient:
            continue
        body = coefficient.to_text(prefix)
        if k == 0:
            chunks.append(body)
            continue
        power = "mu^{}".format(2 * k)
        if coefficient.is_constant() and coefficient.constant_value() in (1, -1):
            chunks.append(power if coefficient.constant_value() == 1 else f"-{power}")
        else:
            chunks.append(f"{power}*({body})" if len(coefficient) > 1 else f"{power}*{body}")
    return " + ".join(chunks) or "0"


def phat_qhat(minors: MinorSums) -> BivariatePair:
    n = minors.n
    if n < 2:
        raise DimensionError(f"phat_qhat needs n >= 2, got n = {n}.")
    return BivariatePair(
        arity=minors.arity,
        phat=tuple(minors.get(n - 2 * k) for k in range(n // 2 + 1)),
        qhat=tuple(minors.get(n - 1 - 2 * k) for k in range((n - 1) // 2 + 1)),
    )


def sylvester_matrix(pair: BivariatePair) -> PolyMatrix:
    """Standard Sylvester matrix in `t`: `deg Q` shifted rows of P, then `deg P` shifted rows of Q."""
    dp, dq = pair.phat_degree, pair.qhat_degree
    size = dp + dq
    zero = MultiPoly.zero(pair.arity)
    p_desc = pair.phat[::-1]
    q_desc = pair.qhat[::-1]
    rows = []
    for shift in range(dq):
        rows.append([p_desc[c - shift] if 0 <= c - shift <= dp else zero for c in range(size)])
    for shift in range(dp):
        rows.append([q_desc[c - shift] if 0 <= c - shift <= dq else zero for c in range(size)])
    return PolyMatrix(rows, pair.arity)


def sylvester_resultant_mu(pair: BivariatePair) -> MultiPoly:
    if not any(pair.phat) and not any(pair.qhat):
        raise ResultantUndefinedError("The resultant of two zero polynomials is undefined.")
    if pair.phat_degree + pair.qhat_degree == 0:
        raise ResultantUndefinedError("Both polynomials are constants in mu^2.")
    return determinant(sylvester_matrix(pair))


def resultant_sign(minors: MinorSums) -> int:
    """The sign `s` with `Res(P, Q) == s * q_n`; raises when neither sign fits."""
    resultant = sylvester_resultant_mu(phat_qhat(minors))
    qn = qn_from_minor_sums(minors)
    if resultant == qn:
        return 1
    if resultant == -qn:
        return -1
    raise InconsistencyError("resultant_sign", "Res(P, Q) is not +-q_n", {"n": minors.n})


__all__ = (
    "BivariatePair",
    "phat_qhat",
    "resultant_sign",
    "sylvester_matrix",
    "sylvester_resultant_mu",
)
