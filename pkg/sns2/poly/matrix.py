import typing

from sns2.error import ArityMismatchError, DimensionError
from sns2.model import IntTerm, Model
from sns2.poly.multipoly import MultiPoly


class MatrixFile(Model):
    """Matrix input file: `{"n": 4, "arity": 10, "entries": [[<poly>, ...], ...]}`."""

    n: int
    arity: int
    entries: list[list[list[IntTerm]]]


class PolyMatrix:
    """Square matrix of `MultiPoly` entries sharing one arity. Immutable; indices are 0-based."""

    __slots__ = ("arity", "n", "rows")

    def __init__(self, rows: typing.Sequence[typing.Sequence[MultiPoly]], arity: int | None = None) -> None:
        n = len(rows)
        if n == 0 and arity is None:
            raise DimensionError("An empty matrix needs an explicit arity.")
        if any(len(row) != n for row in rows):
            raise DimensionError("Matrix must be square.")
        resolved = arity if arity is not None else rows[0][0].arity
        for row in rows:
            for entry in row:
                if entry.arity != resolved:
                    raise ArityMismatchError(resolved, entry.arity)
        self.n = n
        self.arity = resolved
        self.rows: tuple[tuple[MultiPoly, ...], ...] = tuple(tuple(row) for row in rows)

    def __getitem__(self, index: tuple[int, int]) -> MultiPoly:
        i, j = index
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.arity == other.arity and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.arity, self.rows))

    def __repr__(self) -> str:
        return "<{}: n={}, arity={}>".format(self.__class__.__name__, self.n, self.arity)

    @classmethod
    def from_integers(cls, rows: typing.Sequence[typing.Sequence[int]], arity: int = 1) -> typing.Self:
        return cls([[MultiPoly.constant(v, arity) for v in row] for row in rows], arity)

    @classmethod
    def symbolic(cls, n: int) -> typing.Self:
        """Generic matrix: entry `(i, j)` is the variable `x_ij`, numbered row-major (`X_{n*i + j + 1}`)."""
        arity = n * n
        return cls([[MultiPoly.variable(n * i + j + 1, arity) for j in range(n)] for i in range(n)], arity)

    @classmethod
    def from_file(cls, file: MatrixFile) -> typing.Self:
        if len(file.entries) != file.n:
            raise DimensionError(f"Expected {file.n} rows, got {len(file.entries)}.")
        return cls(
            [[MultiPoly.from_terms(entry, file.arity) for entry in row] for row in file.entries],
            file.arity,
        )

    def to_file(self) -> MatrixFile:
        return MatrixFile(
            n=self.n,
            arity=self.arity,
            entries=[[entry.to_terms() for entry in row] for row in self.rows],
        )

    def map(self, func: typing.Callable[[MultiPoly], MultiPoly]) -> "PolyMatrix":
        return PolyMatrix([[func(entry) for entry in row] for row in self.rows], self.arity)

    def negate(self) -> "PolyMatrix":
        return self.map(lambda entry: -entry)

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([[self.rows[j][i] for j in range(self.n)] for i in range(self.n)], self.arity)

    def principal_submatrix(self, indices: typing.Sequence[int]) -> "PolyMatrix":
        return PolyMatrix([[self.rows[i][j] for j in indices] for i in indices], self.arity)

    def scale_row(self, row: int, factor: int) -> "PolyMatrix":
        return PolyMatrix(
            [[entry * factor if i == row else entry for entry in r] for i, r in enumerate(self.rows)],
            self.arity,
        )

    def is_constant(self) -> bool:
        return all(entry.is_constant() for row in self.rows for entry in row)

    def nonzero_count(self) -> int:
        return sum(1 for row in self.rows for entry in row if entry)

    def to_text(self, prefix: str = "X") -> str:
        cells = [[entry.to_text(prefix) for entry in row] for row in self.rows]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)


__all__ = ("MatrixFile", "PolyMatrix")
