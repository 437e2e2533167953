import dataclasses
import typing

import fntypes.result
from fntypes.result import Error, Ok

from sns2.error import DimensionError, PatternParseError
from sns2.model import Model
from sns2.poly.matrix import PolyMatrix
from sns2.poly.multipoly import MultiPoly

type Sign = typing.Literal[-1, 0, 1]
type Entry = tuple[int, int]

TOKENS: typing.Final[dict[str, Sign]] = {"+": 1, "-": -1, "0": 0}
SYMBOLS: typing.Final[dict[int, str]] = {sign: token for token, sign in TOKENS.items()}


class PatternFile(Model):
    """Pattern JSON: `{"n": 4, "signs": [[0, 1, 0, 0], ...]}`."""

    n: int
    signs: list[list[int]]


@dataclasses.dataclass(frozen=True, slots=True)
class SignPattern:
    """An n x n grid over `{+1, -1, 0}`.

    Nonzero entries are numbered row-major from 1; entry `(i, j)` with rank
    `r` becomes `signs[i][j] * X_r` in the symbolic matrix.
    """

    n: int
    signs: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DimensionError("A sign pattern needs n >= 1.")
        if len(self.signs) != self.n or any(len(row) != self.n for row in self.signs):
            raise DimensionError(f"Sign pattern must be {self.n} x {self.n}.")
        if any(s not in (-1, 0, 1) for row in self.signs for s in row):
            raise DimensionError("Sign pattern entries must be -1, 0 or 1.")

    def __repr__(self) -> str:
        return "<SignPattern: n={}, {}>".format(self.n, " / ".join(self.to_text().splitlines()))

    def __getitem__(self, entry: Entry) -> int:
        i, j = entry
        return self.signs[i][j]

    @classmethod
    def from_rows(cls, rows: typing.Sequence[typing.Sequence[int]]) -> typing.Self:
        return cls(n=len(rows), signs=tuple(tuple(row) for row in rows))

    @classmethod
    def zero(cls, n: int) -> typing.Self:
        return cls(n=n, signs=((0,) * n,) * n)

    @classmethod
    def from_file(cls, file: PatternFile) -> typing.Self:
        if len(file.signs) != file.n:
            raise DimensionError(f"Expected {file.n} rows, got {len(file.signs)}.")
        return cls.from_rows(file.signs)

    @classmethod
    def from_json(cls, raw: str | bytes) -> fntypes.result.Result[typing.Self, str]:
        match PatternFile.try_from_raw(raw):
            case Ok(file):
                try:
                    return Ok(cls.from_file(file))
                except DimensionError as exc:
                    return Error(str(exc))
            case Error(err):
                return Error(err)

    def to_file(self) -> PatternFile:
        return PatternFile(n=self.n, signs=[list(row) for row in self.signs])

    def to_json(self) -> str:
        return self.to_file().to_raw()

    def to_text(self) -> str:
        return "\n".join(" ".join(SYMBOLS[s] for s in row) for row in self.signs)

    def entries(self) -> list[tuple[int, int, int]]:
        """Nonzero entries `(i, j, sign)` in row-major order (0-based)."""
        return [(i, j, s) for i, row in enumerate(self.signs) for j, s in enumerate(row) if s]

    def nonzero_count(self) -> int:
        return sum(1 for row in self.signs for s in row if s)

    def variable_index(self, i: int, j: int) -> int:
        """1-based variable number of the nonzero entry `(i, j)`."""
        if not self.signs[i][j]:
            raise IndexError(f"Entry ({i}, {j}) is zero and carries no variable.")
        return 1 + sum(1 for a, row in enumerate(self.signs) for b, s in enumerate(row) if s and (a, b) < (i, j))

    def variable_map(self) -> dict[Entry, int]:
        return {(i, j): rank for rank, (i, j, _) in enumerate(self.entries(), start=1)}

    def _check_entries(self, entries: typing.Iterable[Entry]) -> frozenset[Entry]:
        checked = frozenset(entries)
        for i, j in checked:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise IndexError(f"Entry ({i}, {j}) is outside a {self.n} x {self.n} pattern.")
        return checked

    def negate(self) -> "SignPattern":
        return SignPattern.from_rows([[-s for s in row] for row in self.signs])

    def transpose(self) -> "SignPattern":
        return SignPattern.from_rows([list(col) for col in zip(*self.signs)])

    def resign(self, entries: typing.Iterable[Entry]) -> "SignPattern":
        """Flip the signs of the given (0-based) entries; zero entries stay zero."""
        flipped = self._check_entries(entries)
        return SignPattern.from_rows(
            [[-s if (i, j) in flipped else s for j, s in enumerate(row)] for i, row in enumerate(self.signs)]
        )

    def subpattern(self, entries: typing.Iterable[Entry]) -> "SignPattern":
        """Replace the given (0-based) entries by zero."""
        zeroed = self._check_entries(entries)
        return SignPattern.from_rows(
            [[0 if (i, j) in zeroed else s for j, s in enumerate(row)] for i, row in enumerate(self.signs)]
        )

    def is_subpattern_of(self, other: "SignPattern") -> bool:
        return self.n == other.n and all(
            not s or s == t for row, other_row in zip(self.signs, other.signs) for s, t in zip(row, other_row)
        )

    def symbolic_matrix(self) -> PolyMatrix:
        arity = self.nonzero_count()
        variables = self.variable_map()
        return PolyMatrix(
            [
                [
                    MultiPoly.variable(variables[i, j], arity, s) if s else MultiPoly.zero(arity)
                    for j, s in enumerate(row)
                ]
                for i, row in enumerate(self.signs)
            ],
            arity,
        )


def parse_pattern(text: str) -> SignPattern:
    """Parse rows of whitespace-separated `+`, `-`, `0` tokens.

    Blank lines and lines starting with `#` are skipped.
    """
    rows: list[list[int]] = []
    line_numbers: list[int] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = []
        for column, token in enumerate(stripped.split(), start=1):
            if token not in TOKENS:
                raise PatternParseError(
                    f"Unexpected token {token!r}, expected one of '+', '-', '0'.",
                    line=line_number,
                    column=column,
                )
            row.append(TOKENS[token])
        rows.append(row)
        line_numbers.append(line_number)
    if not rows:
        raise PatternParseError("Empty pattern: n must be at least 1.")
    n = len(rows)
    for row, line_number in zip(rows, line_numbers):
        if len(row) != n:
            raise PatternParseError(f"Expected {n} tokens in every row, got {len(row)}.", line=line_number)
    return SignPattern.from_rows(rows)


__all__ = ("Entry", "PatternFile", "Sign", "SignPattern", "parse_pattern")
