from .fixtures.certificates import square_certificate
from .fixtures.matrices import ex4a, ex5crn, triangular
from .fixtures.patterns import (
    ex4b,
    ex4c,
    exbasic,
    example_three,
    exharder,
    exmixed,
    exnz,
    hexagon,
    loop_on_four_cycle,
    triangle_and_two_four_cycles,
    triangle_with_two_cycle_and_loops,
)

__all__ = (
    "ex4a",
    "ex4b",
    "ex4c",
    "ex5crn",
    "exbasic",
    "example_three",
    "exharder",
    "exmixed",
    "exnz",
    "hexagon",
    "loop_on_four_cycle",
    "square_certificate",
    "triangle_and_two_four_cycles",
    "triangle_with_two_cycle_and_loops",
    "triangular",
)
