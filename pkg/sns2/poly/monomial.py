import typing

type Exponents = tuple[int, ...]


class Monomial(tuple[int, ...]):
    """Exponent vector `X1^e1 * ... * Xk^ek` of a fixed arity `k`.

    Being a tuple, a `Monomial` hashes and compares equal to the plain
    exponent tuple, so both can be used to look up terms.
    """

    __slots__ = ()

    def __new__(cls, exponents: typing.Iterable[int], /) -> typing.Self:
        exps = tuple(exponents)
        if any(not isinstance(e, int) or isinstance(e, bool) or e < 0 for e in exps):
            raise ValueError(f"Monomial exponents must be nonnegative integers, got {exps!r}.")
        return super().__new__(cls, exps)

    def __repr__(self) -> str:
        return "<Monomial: {}>".format(self.to_text() if self.degree else "1")

    @classmethod
    def one(cls, arity: int) -> typing.Self:
        return cls((0,) * arity)

    @classmethod
    def variable(cls, index: int, arity: int) -> typing.Self:
        """`X_index`, 1-based."""
        if not 1 <= index <= arity:
            raise IndexError(f"Variable index {index} out of range 1..{arity}.")
        return cls(1 if i == index - 1 else 0 for i in range(arity))

    @property
    def arity(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def support(self) -> frozenset[int]:
        """0-based positions of the nonzero exponents."""
        return frozenset(i for i, e in enumerate(self) if e)

    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self)

    def to_text(self, prefix: str = "X", names: typing.Sequence[str] | None = None) -> str:
        factors = []
        for i, e in enumerate(self):
            if not e:
                continue
            name = names[i] if names is not None else f"{prefix}{i + 1}"
            factors.append(name if e == 1 else f"{name}^{e}")
        return "*".join(factors)


def graded_lex_key(exponents: Exponents, /) -> tuple[int, tuple[int, ...]]:
    """Ascending total degree, then descending exponent vectors (`X1` heaviest first)."""
    return sum(exponents), tuple(-e for e in exponents)


__all__ = ("Exponents", "Monomial", "graded_lex_key")
