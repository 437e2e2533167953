import dataclasses
import itertools
import typing

from fntypes.option import Nothing, Option, Some

from sns2.error import DimensionError, InconsistencyError
from sns2.modules import logger
from sns2.poly.determinant import LaplaceExpansion, bareiss_determinant, determinant
from sns2.poly.matrix import PolyMatrix
from sns2.poly.multipoly import MultiPoly


@dataclasses.dataclass(frozen=True, slots=True)
class MinorSums:
    """Minor-sums `J1..Jn` of an n x n matrix.

    `values[k - 1]` is the sum of all k x k principal minors. `get` extends
    the sequence with `J0 = 1` and `Jk = 0` outside `0..n`.
    """

    n: int
    arity: int
    values: tuple[MultiPoly, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.n:
            raise DimensionError(f"Expected {self.n} minor-sums, got {len(self.values)}.")
        for value in self.values:
            if value.arity != self.arity:
                raise DimensionError(f"Minor-sum arity {value.arity} differs from {self.arity}.")

    def __repr__(self) -> str:
        return "<MinorSums: n={}, arity={}>".format(self.n, self.arity)

    def __getitem__(self, k: int) -> MultiPoly:
        return self.get(k)

    def __iter__(self) -> typing.Iterator[MultiPoly]:
        return iter(self.values)

    @classmethod
    def symbolic(cls, n: int) -> typing.Self:
        """Fresh variables: `J_k` is the k-th variable of a ring of arity `n`."""
        return cls(n=n, arity=n, values=tuple(MultiPoly.variable(k, n) for k in range(1, n + 1)))

    def get(self, k: int) -> MultiPoly:
        if k == 0:
            return MultiPoly.constant(1, self.arity)
        if 1 <= k <= self.n:
            return self.values[k - 1]
        return MultiPoly.zero(self.arity)

    def truncate(self, m: int) -> "MinorSums":
        """`J1..Jm` as the minor-sums of an m x m problem."""
        return MinorSums(n=m, arity=self.arity, values=self.values[:m])

    def compose(self, expression: MultiPoly) -> MultiPoly:
        """Instantiate an expression in `J1..Jn` (arity `n`) with these minor-sums."""
        return expression.compose(list(self.values))


def minor_sums(matrix: PolyMatrix) -> MinorSums:
    n = matrix.n
    if n < 1:
        raise DimensionError("Minor-sums need n >= 1.")
    sums = [MultiPoly.zero(matrix.arity) for _ in range(n)]
    if matrix.is_constant():
        constants = [[entry.constant_value() for entry in row] for row in matrix.rows]
        for k in range(1, n + 1):
            total = sum(
                bareiss_determinant([[constants[i][j] for j in subset] for i in subset])
                for subset in itertools.combinations(range(n), k)
            )
            sums[k - 1] = MultiPoly.constant(total, matrix.arity)
    else:
        # One memo table serves every principal minor.
        expansion = LaplaceExpansion(matrix)
        for k in range(1, n + 1):
            for subset in itertools.combinations(range(n), k):
                sums[k - 1] = sums[k - 1] + expansion.minor(subset, subset)
        logger.debug("minor_sums n={}: {} memo entries", n, len(expansion.memo))
    return MinorSums(n=n, arity=matrix.arity, values=tuple(sums))


def script_M(minors: MinorSums) -> PolyMatrix:
    """Banded (n-1) x (n-1) matrix with entry `(r, c)` equal to `J_{2r-c}` (1-based).

    Row 1 reads `(J1, 1, 0, ...)`, row 2 `(J3, J2, J1, 1, ...)`.
    """
    n = minors.n
    if n < 2:
        raise DimensionError(f"script_M needs n >= 2, got n = {n}.")
    return PolyMatrix(
        [[minors.get(2 * r - c) for c in range(1, n)] for r in range(1, n)],
        minors.arity,
    )


def qn_from_minor_sums(minors: MinorSums) -> MultiPoly:
    return determinant(script_M(minors))


def qn_symbolic(n: int) -> MultiPoly:
    """The polynomial `q_n` in the variables `J1..Jn`."""
    return qn_from_minor_sums(MinorSums.symbolic(n))


@dataclasses.dataclass(frozen=True, slots=True)
class SingularFactorization:
    """`q_n = J_{n-1} * q_{n-1}(J1..J_{n-1})`, valid whenever `J_n` vanishes."""

    factor: MultiPoly
    cofactor: MultiPoly
    product: MultiPoly

    def to_text(self, prefix: str = "X") -> str:
        return "({}) * ({})".format(self.factor.to_text(prefix), self.cofactor.to_text(prefix))


def singular_factorization(minors: MinorSums) -> Option[SingularFactorization]:
    """Factor `q_n` when `J_n` is identically zero.

    With `J_n = 0` the last row of `script_M` is `(0, ..., 0, J_{n-1})`.
    """
    n = minors.n
    if n < 3 or minors.get(n):
        return Nothing()
    factor = minors.get(n - 1)
    cofactor = qn_from_minor_sums(minors.truncate(n - 1))
    product = qn_from_minor_sums(minors)
    if factor * cofactor != product:
        raise InconsistencyError(
            "singular_factorization",
            "J_{n-1} * q_{n-1} differs from q_n although J_n = 0",
            {"n": n},
        )
    return Some(SingularFactorization(factor=factor, cofactor=cofactor, product=product))


__all__ = (
    "MinorSums",
    "SingularFactorization",
    "minor_sums",
    "qn_from_minor_sums",
    "qn_symbolic",
    "script_M",
    "singular_factorization",
)
