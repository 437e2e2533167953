import typing

from sns2.error import DimensionError
from sns2.modules import logger
from sns2.poly.matrix import PolyMatrix
from sns2.poly.multipoly import MultiPoly


def bareiss_determinant(rows: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination over the integers."""
    a = [list(row) for row in rows]
    n = len(a)
    sign, previous = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // previous
            a[i][k] = 0
        previous = pivot
    return sign * a[n - 1][n - 1] if n else 1


class LaplaceExpansion:
    """Memoized cofactor expansion over (row-set, column-set) bitmasks.

    Each step expands along the remaining row or column with the fewest
    nonzero entries; ties go to the lowest index, rows before columns.
    """

    def __init__(self, matrix: PolyMatrix) -> None:
        self.matrix = matrix
        self.n = matrix.n
        self.row_masks = [
            sum(1 << j for j in range(self.n) if matrix[i, j]) for i in range(self.n)
        ]
        self.col_masks = [
            sum(1 << i for i in range(self.n) if matrix[i, j]) for j in range(self.n)
        ]
        self.memo: dict[tuple[int, int], MultiPoly] = {}

    @staticmethod
    def _position(mask: int, index: int) -> int:
        return (mask & ((1 << index) - 1)).bit_count()

    def _pivot_line(self, rows: int, cols: int) -> tuple[bool, int, int]:
        """`(is_row, index, nonzeros)` of the sparsest remaining line."""
        best: tuple[bool, int, int] | None = None
        for i in range(self.n):
            if rows >> i & 1:
                count = (self.row_masks[i] & cols).bit_count()
                if best is None or count < best[2]:
                    best = (True, i, count)
        for j in range(self.n):
            if cols >> j & 1:
                count = (self.col_masks[j] & rows).bit_count()
                if best is None or count < best[2]:
                    best = (False, j, count)
        assert best is not None
        return best

    def minor(self, rows: typing.Iterable[int], cols: typing.Iterable[int]) -> MultiPoly:
        """Minor on the given 0-based row and column indices; the empty minor is 1."""
        row_mask = sum(1 << i for i in set(rows))
        col_mask = sum(1 << j for j in set(cols))
        if row_mask.bit_count() != col_mask.bit_count():
            raise DimensionError("A minor needs as many rows as columns.")
        if not row_mask:
            return MultiPoly.constant(1, self.matrix.arity)
        return self(row_mask, col_mask)

    def __call__(self, rows: int, cols: int) -> MultiPoly:
        key = (rows, cols)
        if key in self.memo:
            return self.memo[key]
        arity = self.matrix.arity
        if rows.bit_count() == 1:
            result = self.matrix[rows.bit_length() - 1, cols.bit_length() - 1]
        else:
            is_row, index, count = self._pivot_line(rows, cols)
            result = MultiPoly.zero(arity)
            if count:
                if is_row:
                    line_pos = self._position(rows, index)
                    others = self.row_masks[index] & cols
                else:
                    line_pos = self._position(cols, index)
                    others = self.col_masks[index] & rows
                while others:
                    other = (others & -others).bit_length() - 1
                    others &= others - 1
                    if is_row:
                        entry = self.matrix[index, other]
                        other_pos = self._position(cols, other)
                        minor = self(rows & ~(1 << index), cols & ~(1 << other))
                    else:
                        entry = self.matrix[other, index]
                        other_pos = self._position(rows, other)
                        minor = self(rows & ~(1 << other), cols & ~(1 << index))
                    if not minor:
                        continue
                    term = entry * minor
                    result = result - term if (line_pos + other_pos) % 2 else result + term
        self.memo[key] = result
        return result


def determinant(matrix: PolyMatrix) -> MultiPoly:
    """Exact determinant of a polynomial matrix.

    All-constant matrices go through Bareiss elimination; everything else
    through the memoized sparse Laplace expansion.
    """
    n = matrix.n
    if n < 1:
        raise DimensionError("Determinant needs n >= 1.")
    if matrix.is_constant():
        value = bareiss_determinant([[entry.constant_value() for entry in row] for row in matrix.rows])
        return MultiPoly.constant(value, matrix.arity)
    full = (1 << n) - 1
    expansion = LaplaceExpansion(matrix)
    result = expansion(full, full)
    logger.debug("determinant {}x{}: {} memo entries, {} terms", n, n, len(expansion.memo), len(result))
    return result


__all__ = ("LaplaceExpansion", "bareiss_determinant", "determinant")
