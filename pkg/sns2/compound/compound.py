import itertools

from sns2.error import DimensionError
from sns2.poly.determinant import determinant
from sns2.poly.matrix import PolyMatrix
from sns2.poly.multipoly import MultiPoly

type IndexPair = tuple[int, int]


def index_pairs(n: int) -> list[IndexPair]:
    """Row and column basis of the second compound: pairs `i < j`, lexicographic."""
    return list(itertools.combinations(range(n), 2))


def compound_entry(matrix: PolyMatrix, row: IndexPair, col: IndexPair) -> MultiPoly:
    i, j = row
    if row == col:
        return matrix[i, i] + matrix[j, j]
    shared = set(row) & set(col)
    if not shared:
        return MultiPoly.zero(matrix.arity)
    (u,) = set(row) - shared
    (v,) = set(col) - shared
    entry = matrix[u, v]
    return entry if row.index(u) == col.index(v) else -entry


def second_additive_compound(matrix: PolyMatrix) -> PolyMatrix:
    """The matrix `M^[2]` on the basis `e_i ^ e_j`, whose eigenvalues are the
    pairwise eigenvalue sums of `M`.

    Off-diagonal entries sharing one index `s` are `+-M_uv` with `u`, `v` the
    unshared indices; the sign is `+` iff `u` and `v` sit at the same position
    inside their pairs.
    """
    if matrix.n < 2:
        raise DimensionError(f"The second additive compound needs n >= 2, got n = {matrix.n}.")
    pairs = index_pairs(matrix.n)
    return PolyMatrix(
        [[compound_entry(matrix, row, col) for col in pairs] for row in pairs],
        matrix.arity,
    )


def det2(matrix: PolyMatrix) -> MultiPoly:
    return determinant(second_additive_compound(matrix))


def pair_labels(n: int, base: int = 1) -> list[str]:
    return ["({},{})".format(i + base, j + base) for i, j in index_pairs(n)]


def compound_text(matrix: PolyMatrix, prefix: str = "X") -> str:
    compound = second_additive_compound(matrix)
    labels = pair_labels(matrix.n)
    width = max(map(len, labels))
    lines = zip(labels, compound.to_text(prefix).splitlines())
    return "\n".join(f"{label.rjust(width)} {line}" for label, line in lines)


__all__ = (
    "IndexPair",
    "compound_entry",
    "compound_text",
    "det2",
    "index_pairs",
    "pair_labels",
    "second_additive_compound",
)
