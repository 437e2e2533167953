import math
import operator
import types
import typing
from fractions import Fraction

from sns2.error import ArityMismatchError, DimensionError
from sns2.model import IntTerm, RationalTerm
from sns2.msgspec_utils import encoder
from sns2.poly.monomial import Exponents, Monomial, graded_lex_key

type Rational = int | Fraction


def _add_exponents(a: Exponents, b: Exponents) -> Exponents:
    return tuple(map(operator.add, a, b))


class MultiPoly:
    """Exact sparse multivariate polynomial with integer coefficients.

    Instances are immutable and canonical: no zero coefficient is stored, so
    structural equality is mathematical equality. Iteration yields
    `(Monomial, coefficient)` pairs in graded-lex order.

    ```
    x1, x2 = MultiPoly.variable(1, 2), MultiPoly.variable(2, 2)
    p = (x1 + x2) * (x1 - x2)
    p.to_text()  #> "X1^2 - X2^2"
    ```
    """

    __slots__ = ("_arity", "_hash", "_sorted", "_terms")

    _arity: int
    _terms: dict[Exponents, int]

    def __init__(self, arity: int, terms: typing.Mapping[typing.Iterable[int], int] | None = None) -> None:
        if arity < 0:
            raise DimensionError(f"Arity must be nonnegative, got {arity}.")
        clean: dict[Exponents, int] = {}
        for exponents, coefficient in (terms or {}).items():
            key = tuple(Monomial(exponents))
            if len(key) != arity:
                raise ArityMismatchError(arity, len(key))
            if not isinstance(coefficient, int) or isinstance(coefficient, bool):
                raise TypeError(f"Coefficients must be integers, got {coefficient!r}.")
            clean[key] = clean.get(key, 0) + coefficient
        self._setup(arity, {k: c for k, c in clean.items() if c})

    def _setup(self, arity: int, terms: dict[Exponents, int]) -> None:
        object.__setattr__(self, "_arity", arity)
        object.__setattr__(self, "_terms", terms)
        object.__setattr__(self, "_hash", None)
        object.__setattr__(self, "_sorted", None)

    @classmethod
    def _from_clean(cls, arity: int, terms: dict[Exponents, int]) -> "MultiPoly":
        """Trusted constructor: `terms` is already canonical and owned by the result."""
        poly = cls.__new__(cls)
        poly._setup(arity, terms)
        return poly

    def __setattr__(self, name: str, value: typing.Any) -> None:
        raise AttributeError(f"{self.__class__.__name__} is immutable.")

    @classmethod
    def zero(cls, arity: int) -> "MultiPoly":
        return cls._from_clean(arity, {})

    @classmethod
    def constant(cls, value: int, arity: int) -> "MultiPoly":
        return cls._from_clean(arity, {(0,) * arity: value} if value else {})

    @classmethod
    def variable(cls, index: int, arity: int, coefficient: int = 1) -> "MultiPoly":
        """`coefficient * X_index`, 1-based."""
        return cls._from_clean(arity, {tuple(Monomial.variable(index, arity)): coefficient} if coefficient else {})

    @classmethod
    def from_terms(cls, terms: typing.Iterable[IntTerm], arity: int | None = None) -> "MultiPoly":
        """Build from the file form `[[coeff, [e1, ..., ek]], ...]`."""
        items = list(terms)
        if arity is None:
            if not items:
                raise DimensionError("Arity is required to decode an empty term list.")
            arity = len(items[0][1])
        mapping: dict[Exponents, int] = {}
        for coefficient, exponents in items:
            key = tuple(exponents)
            mapping[key] = mapping.get(key, 0) + coefficient
        return cls(arity, mapping)

    @classmethod
    def from_rational_terms(cls, terms: typing.Iterable[RationalTerm], arity: int) -> tuple["MultiPoly", int]:
        """Clear denominators: returns `(d * p, d)` with `d` the least common denominator."""
        items = [(Fraction(c), tuple(e)) for c, e in terms]
        denominator = math.lcm(*(c.denominator for c, _ in items)) if items else 1
        mapping: dict[Exponents, int] = {}
        for coefficient, exponents in items:
            mapping[exponents] = mapping.get(exponents, 0) + int(coefficient * denominator)
        return cls(arity, mapping), denominator

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def terms(self) -> typing.Mapping[Exponents, int]:
        return types.MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> typing.Iterator[tuple[Monomial, int]]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        if self._sorted is None:
            object.__setattr__(
                self,
                "_sorted",
                [(Monomial(k), self._terms[k]) for k in sorted(self._terms, key=graded_lex_key)],
            )
        return list(self._sorted)  # type: ignore

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._arity == other._arity and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self._arity, frozenset(self._terms.items()))))
        return self._hash  # type: ignore

    def __repr__(self) -> str:
        text = self.to_text()
        return "<MultiPoly: arity={}, {}>".format(self._arity, text if len(text) <= 80 else text[:77] + "...")

    def _check(self, other: "MultiPoly") -> None:
        if self._arity != other._arity:
            raise ArityMismatchError(self._arity, other._arity)

    def _coerce(self, other: typing.Any) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return MultiPoly.constant(other, self._arity)
        return None

    def __add__(self, other: "MultiPoly | int") -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        if len(rhs._terms) > len(self._terms):
            return rhs + self
        terms = dict(self._terms)
        for key, coefficient in rhs._terms.items():
            value = terms.get(key, 0) + coefficient
            if value:
                terms[key] = value
            else:
                terms.pop(key, None)
        return MultiPoly._from_clean(self._arity, terms)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._from_clean(self._arity, {k: -c for k, c in self._terms.items()})

    def __pos__(self) -> "MultiPoly":
        return self

    def __sub__(self, other: "MultiPoly | int") -> "MultiPoly":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: int) -> "MultiPoly":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int) and not isinstance(other, bool):
            if not other:
                return MultiPoly.zero(self._arity)
            return MultiPoly._from_clean(self._arity, {k: c * other for k, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        if not self._terms or not other._terms:
            return MultiPoly.zero(self._arity)
        terms: dict[Exponents, int] = {}
        for ka, ca in self._terms.items():
            for kb, cb in other._terms.items():
                key = _add_exponents(ka, kb)
                terms[key] = terms.get(key, 0) + ca * cb
        return MultiPoly._from_clean(self._arity, {k: c for k, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("Negative powers are not polynomials.")
        result = MultiPoly.constant(1, self._arity)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self) -> int:
        """Coefficient of the monomial `1`."""
        return self._terms.get((0,) * self._arity, 0)

    def coefficient(self, monomial: typing.Iterable[int]) -> int:
        return self._terms.get(tuple(monomial), 0)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(k) for k in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(k) for k in self._terms}) <= 1

    def variables(self) -> frozenset[int]:
        """1-based indices of the variables that occur."""
        return frozenset(i + 1 for key in self._terms for i, e in enumerate(key) if e)

    def filter_terms(self, predicate: typing.Callable[[Monomial, int], bool]) -> "MultiPoly":
        return MultiPoly._from_clean(
            self._arity,
            {k: c for k, c in self._terms.items() if predicate(Monomial(k), c)},
        )

    def evaluate(self, point: typing.Sequence[Rational]) -> Fraction:
        if len(point) != self._arity:
            raise DimensionError(f"Point has {len(point)} coordinates, polynomial has arity {self._arity}.")
        values = [Fraction(v) for v in point]
        powers: dict[tuple[int, int], Fraction] = {}
        total = Fraction(0)
        for key, coefficient in self._terms.items():
            term = Fraction(coefficient)
            for i, e in enumerate(key):
                if e:
                    if (i, e) not in powers:
                        powers[i, e] = values[i] ** e
                    term *= powers[i, e]
            total += term
        return total

    def compose(self, substitutions: typing.Sequence["MultiPoly"]) -> "MultiPoly":
        """Substitute `substitutions[i]` for `X_{i+1}`; the result has their common arity."""
        if len(substitutions) != self._arity:
            raise DimensionError(f"Expected {self._arity} substitutions, got {len(substitutions)}.")
        if not substitutions:
            raise DimensionError("Cannot compose a polynomial of arity 0.")
        target = substitutions[0].arity
        for sub in substitutions:
            if sub.arity != target:
                raise ArityMismatchError(target, sub.arity)
        powers: dict[tuple[int, int], MultiPoly] = {}
        result = MultiPoly.zero(target)
        for key, coefficient in self._terms.items():
            term = MultiPoly.constant(coefficient, target)
            for i, e in enumerate(key):
                if e:
                    if (i, e) not in powers:
                        powers[i, e] = substitutions[i] ** e
                    term = term * powers[i, e]
            result = result + term
        return result

    def extend_arity(self, arity: int, offset: int = 0) -> "MultiPoly":
        """Embed into a larger ring: variable `i` becomes variable `i + offset`."""
        if arity < self._arity + offset:
            raise DimensionError(f"Cannot embed arity {self._arity} at offset {offset} into arity {arity}.")
        tail = arity - self._arity - offset
        return MultiPoly._from_clean(
            arity,
            {(0,) * offset + key + (0,) * tail: c for key, c in self._terms.items()},
        )

    def to_terms(self) -> list[IntTerm]:
        return [(coefficient, list(monomial)) for monomial, coefficient in self.sorted_terms()]

    def to_text(self, prefix: str = "X", names: typing.Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for monomial, coefficient in self.sorted_terms():
            magnitude = abs(coefficient)
            body = monomial.to_text(prefix, names)
            if not body:
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            if not chunks:
                chunks.append(text if coefficient > 0 else f"-{text}")
            else:
                chunks.append(f"+ {text}" if coefficient > 0 else f"- {text}")
        return " ".join(chunks)


def add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    p._check(q)
    return p + q


def mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    p._check(q)
    return p * q


def term_census(p: MultiPoly) -> tuple[int, int]:
    """`(positive_count, negative_count)`; `p` has mixed terms iff both are nonzero."""
    positive = sum(1 for c in p.terms.values() if c > 0)
    return positive, len(p) - positive


def has_mixed_terms(p: MultiPoly) -> bool:
    return all(term_census(p))


def evaluate(p: MultiPoly, point: typing.Sequence[Rational]) -> Fraction:
    return p.evaluate(point)


def substitute_zero_and_resign(
    p: MultiPoly,
    zero_vars: typing.Iterable[int] = (),
    flip_vars: typing.Iterable[int] = (),
) -> MultiPoly:
    """Set the listed variables (1-based) to zero and negate the flipped ones; zeroing wins."""
    zero = frozenset(zero_vars)
    flip = frozenset(flip_vars) - zero
    for index in zero | flip:
        if not 1 <= index <= p.arity:
            raise IndexError(f"Variable index {index} out of range 1..{p.arity}.")
    zero_pos = [i - 1 for i in zero]
    flip_pos = [i - 1 for i in flip]
    terms: dict[Exponents, int] = {}
    for key, coefficient in p.terms.items():
        if any(key[i] for i in zero_pos):
            continue
        if sum(key[i] for i in flip_pos) % 2:
            coefficient = -coefficient
        terms[key] = coefficient
    return MultiPoly._from_clean(p.arity, terms)


def rationals_to_poly(terms: typing.Iterable[RationalTerm], arity: int) -> tuple[MultiPoly, int]:
    """Clear a common denominator at the boundary: `(integer polynomial, denominator)`."""
    return MultiPoly.from_rational_terms(terms, arity)


@encoder.add_enc_hook(MultiPoly)
def multipoly_enc_hook(poly: MultiPoly) -> list[IntTerm]:
    return poly.to_terms()


__all__ = (
    "MultiPoly",
    "Rational",
    "add",
    "evaluate",
    "has_mixed_terms",
    "mul",
    "multipoly_enc_hook",
    "rationals_to_poly",
    "substitute_zero_and_resign",
    "term_census",
)
