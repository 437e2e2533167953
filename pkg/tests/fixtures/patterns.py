import pytest

from sns2.signpat import SignPattern


def pattern(*rows: list[int]) -> SignPattern:
    return SignPattern.from_rows(rows)


def pattern_from_arcs(n: int, arcs: list[tuple[int, int]], sign: int = 1) -> SignPattern:
    rows = [[0] * n for _ in range(n)]
    for i, j in arcs:
        rows[i][j] = sign
    return SignPattern.from_rows(rows)


@pytest.fixture()
def example_three():
    return pattern([1, -1, -1], [1, 1, 1], [1, 0, 1])


@pytest.fixture()
def ex4b():
    return pattern([1, 1, 0, -1], [-1, 1, 1, 0], [0, -1, 1, 1], [1, 0, -1, 1])


@pytest.fixture()
def ex4c():
    return pattern([-1, 1, 1, 1], [0, 0, -1, -1], [-1, 0, 0, -1], [-1, 0, -1, 0])


@pytest.fixture()
def exbasic():
    return pattern(
        [1, 1, 1, 1, 1],
        [0, 0, -1, -1, 1],
        [0, 0, 0, -1, 1],
        [0, 0, 0, 0, 1],
        [1, 0, 0, 0, 0],
    )


@pytest.fixture()
def exharder():
    return pattern(
        [0, 1, 1, 1, 0],
        [0, 0, -1, -1, 1],
        [0, 0, 1, -1, 1],
        [0, 0, 0, 1, 1],
        [1, 0, 0, 0, 0],
    )


@pytest.fixture()
def exnz():
    return pattern([0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1], [0, -1, 0, 0])


@pytest.fixture()
def exmixed():
    return pattern([0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, 1], [0, -1, 0, 1])


@pytest.fixture()
def hexagon():
    ring = [(i, (i + 1) % 6) for i in range(6)]
    diagonals = [(0, 3), (2, 5), (1, 4)]
    edges = ring + diagonals
    return pattern_from_arcs(6, edges + [(j, i) for i, j in edges])


@pytest.fixture()
def triangle_and_two_four_cycles():
    return pattern_from_arcs(8, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 0), (4, 3), (3, 5), (5, 6), (6, 4)])


@pytest.fixture()
def triangle_with_two_cycle_and_loops():
    return pattern_from_arcs(6, [(0, 1), (1, 2), (2, 0), (2, 1), (1, 1), (3, 3), (4, 4)])


@pytest.fixture()
def loop_on_four_cycle():
    return pattern_from_arcs(5, [(0, 0), (0, 1), (1, 2), (2, 3), (3, 0)])
