import dataclasses
import enum
import typing
from fractions import Fraction

from sns2.error import DimensionError
from sns2.poly.multipoly import Rational

type Tableau = list[list[Fraction]]


class SimplexStatus(str, enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclasses.dataclass(frozen=True, slots=True)
class SimplexResult:
    """Outcome of `exact_simplex`.

    For an infeasible system, `farkas` is a vector `y` with `y . A_j <= 0`
    for every column `A_j` and `y . b > 0`.
    """

    status: SimplexStatus
    solution: tuple[Fraction, ...] | None = None
    value: Fraction | None = None
    farkas: tuple[Fraction, ...] | None = None

    @property
    def is_feasible(self) -> bool:
        return self.status is not SimplexStatus.INFEASIBLE


def _pivot(tableau: Tableau, objective: list[Fraction], basis: list[int], row: int, col: int) -> None:
    pivot_row = tableau[row]
    pivot = pivot_row[col]
    if pivot != 1:
        tableau[row] = pivot_row = [value / pivot for value in pivot_row]
    for i, current in enumerate(tableau):
        if i == row:
            continue
        factor = current[col]
        if factor:
            tableau[i] = [a - factor * b if b else a for a, b in zip(current, pivot_row)]
    factor = objective[col]
    if factor:
        objective[:] = [a - factor * b if b else a for a, b in zip(objective, pivot_row)]
    basis[row] = col


def _objective_row(tableau: Tableau, basis: list[int], cost: typing.Sequence[Fraction]) -> list[Fraction]:
    """Reduced costs, with minus the objective value in the last slot."""
    objective = [*cost, Fraction(0)]
    for row, col in zip(tableau, basis):
        if cost[col]:
            objective = [a - cost[col] * b for a, b in zip(objective, row)]
    return objective


def _bland(tableau: Tableau, objective: list[Fraction], basis: list[int], columns: range) -> SimplexStatus:
    """Minimize with Bland's rule: lowest entering index, lowest leaving basic index on ratio ties."""
    while True:
        entering = next((j for j in columns if objective[j] < 0), None)
        if entering is None:
            return SimplexStatus.OPTIMAL
        leaving: tuple[Fraction, int, int] | None = None
        for i, row in enumerate(tableau):
            if row[entering] > 0:
                candidate = (row[-1] / row[entering], basis[i], i)
                if leaving is None or candidate[:2] < leaving[:2]:
                    leaving = candidate
        if leaving is None:
            return SimplexStatus.UNBOUNDED
        _pivot(tableau, objective, basis, leaving[2], entering)


def exact_simplex(
    a: typing.Sequence[typing.Sequence[Rational]],
    b: typing.Sequence[Rational],
    c: typing.Sequence[Rational] | None = None,
) -> SimplexResult:
    """Minimize `c . x` subject to `A x = b`, `x >= 0`, over exact rationals.

    Phase one runs on artificial variables; when it ends with a positive
    objective the system is infeasible and the phase-one duals are returned
    as a Farkas certificate. Without `c` only feasibility is decided.
    """
    m = len(a)
    if len(b) != m:
        raise DimensionError(f"A has {m} rows but b has {len(b)} entries.")
    n = len(a[0]) if m else len(c or ())
    if any(len(row) != n for row in a):
        raise DimensionError("Rows of A must have equal length.")
    if c is not None and len(c) != n:
        raise DimensionError(f"c has {len(c)} entries, A has {n} columns.")

    signs = [-1 if value < 0 else 1 for value in b]
    tableau: Tableau = [
        [Fraction(v) * s for v in row] + [Fraction(int(i == k)) for k in range(m)] + [Fraction(rhs) * s]
        for i, (row, rhs, s) in enumerate(zip(a, b, signs))
    ]
    basis = list(range(n, n + m))
    phase_one = [Fraction(0)] * n + [Fraction(1)] * m
    objective = _objective_row(tableau, basis, phase_one)
    _bland(tableau, objective, basis, range(n + m))

    if -objective[-1] > 0:
        # Reduced cost of artificial k is 1 - pi_k, with pi the phase-one duals.
        duals = [1 - objective[n + k] for k in range(m)]
        return SimplexResult(
            status=SimplexStatus.INFEASIBLE,
            farkas=tuple(y * s for y, s in zip(duals, signs)),
        )

    # Drive artificial variables out of the basis; rows where that is impossible are redundant.
    row = 0
    while row < len(tableau):
        if basis[row] >= n:
            col = next((j for j in range(n) if tableau[row][j] != 0), None)
            if col is None:
                del tableau[row], basis[row]
                continue
            _pivot(tableau, objective, basis, row, col)
        row += 1
    tableau = [r[:n] + r[-1:] for r in tableau]

    status = SimplexStatus.OPTIMAL
    cost = [Fraction(v) for v in c] if c is not None else [Fraction(0)] * n
    if c is not None:
        status = _bland(tableau, _objective_row(tableau, basis, cost), basis, range(n))
        if status is SimplexStatus.UNBOUNDED:
            return SimplexResult(status=status)

    solution = [Fraction(0)] * n
    for i, col in enumerate(basis):
        solution[col] = tableau[i][-1]
    value = sum((cj * xj for cj, xj in zip(cost, solution)), Fraction(0))
    return SimplexResult(status=status, solution=tuple(solution), value=value)


__all__ = ("SimplexResult", "SimplexStatus", "exact_simplex")
