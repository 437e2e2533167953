import pytest

from sns2.poly import MultiPoly, PolyMatrix


def variables(arity: int) -> list[MultiPoly]:
    return [MultiPoly.variable(i, arity) for i in range(1, arity + 1)]


@pytest.fixture()
def triangular():
    return PolyMatrix.from_integers([[1, 5, -2, 7], [0, 2, 3, 1], [0, 0, 3, -4], [0, 0, 0, 4]])


@pytest.fixture()
def ex4a():
    x1, x2, x3, x4, x5, x6, x7, x8 = variables(8)
    zero = MultiPoly.zero(8)
    return PolyMatrix(
        [
            [x1, x2 - x3, zero, -x4],
            [x1, x2 + x5, -x6 - x7, -x8],
            [-x1, -x2 - x5, x6 + x7, x8],
            [zero, x3 - x5, -x6 + x7, x4 + x8],
        ]
    )


@pytest.fixture()
def ex5crn():
    x1, x2, x3, x4, x5, x6, x7 = variables(7)
    zero = MultiPoly.zero(7)
    return PolyMatrix(
        [
            [x1 + x4, -x6, -x3, x5, -x7],
            [-x1 - x4, x6 + x2, zero, -x5, x7],
            [zero, -x2, x3, zero, zero],
            [x4, zero, -x3, x5, zero],
            [-x4, x6, zero, -x5, x7],
        ]
    )
