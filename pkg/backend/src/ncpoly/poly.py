from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, NamedTuple, Sequence, TypeVar, Union

import sympy

from algebra import (
    AlgebraMismatchError,
    CoeffAlgebra,
    CoeffElem,
    Scalar,
    ScalarLike,
    to_scalar,
)

from .word import MalformedWordError, Word, concat, letter_word

WordImage = Iterable[tuple[Word, Scalar]]

K = TypeVar("K")


def coerce_scalar(value: ScalarLike) -> Scalar:
    if isinstance(value, sympy.Expr):
        return value
    return to_scalar(value)


def accumulate(acc: dict[K, Scalar], key: K, value: ScalarLike) -> None:
    previous = acc.get(key)
    acc[key] = coerce_scalar(value) if previous is None else previous + coerce_scalar(value)


def canonical_items(acc: dict[K, Scalar]) -> list[tuple[K, Scalar]]:
    """Expands the accumulated scalars and drops the ones that vanish."""
    result = []
    for key, value in acc.items():
        value = sympy.expand(value)
        if value != 0:
            result.append((key, value))
    return result


class CoeffWord(NamedTuple):
    """A word with general (not yet expanded) coefficients c_0 X c_1 ... X c_m."""

    coeffs: tuple[CoeffElem, ...]
    letters: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class NCPoly:
    """
    A polynomial in B<X_1, ..., X_n> in normal form: a sorted tuple of basis words
    with nonzero exact scalars.
    """

    algebra: CoeffAlgebra
    n_vars: int
    terms: tuple[tuple[Word, Scalar], ...]

    @staticmethod
    def from_terms(
        algebra: CoeffAlgebra, n_vars: int, terms: Iterable[tuple[Word, ScalarLike]]
    ) -> NCPoly:
        if n_vars < 1:
            raise MalformedWordError(f"n_vars must be positive, got {n_vars}.")
        acc: dict[Word, Scalar] = {}
        for w, c in terms:
            w.check(algebra, n_vars)
            accumulate(acc, w, c)
        items = canonical_items(acc)
        items.sort(key=lambda kv: kv[0].sort_key)
        return NCPoly(algebra, n_vars, tuple(items))

    @staticmethod
    def zero(algebra: CoeffAlgebra, n_vars: int) -> NCPoly:
        return NCPoly(algebra, n_vars, ())

    @staticmethod
    def one(algebra: CoeffAlgebra, n_vars: int) -> NCPoly:
        return NCPoly.from_terms(
            algebra, n_vars, ((Word.constant(i), 1) for i in algebra.unit_indices)
        )

    @staticmethod
    def scalar(algebra: CoeffAlgebra, n_vars: int, c: ScalarLike) -> NCPoly:
        return NCPoly.one(algebra, n_vars).scale(c)

    @staticmethod
    def constant(algebra: CoeffAlgebra, n_vars: int, b: CoeffElem) -> NCPoly:
        return NCPoly.from_terms(
            algebra, n_vars, ((Word.constant(i), v) for i, v in algebra.decompose(b))
        )

    @staticmethod
    def var(algebra: CoeffAlgebra, n_vars: int, i: int) -> NCPoly:
        if not 1 <= i <= n_vars:
            raise MalformedWordError(f"Letter {i} out of range for {n_vars} variable(s).")
        return NCPoly.from_terms(algebra, n_vars, ((w, 1) for w in letter_word(algebra, i)))

    @staticmethod
    def monomial(
        algebra: CoeffAlgebra,
        n_vars: int,
        coeffs: Sequence[CoeffElem],
        letters: Sequence[int],
        c: ScalarLike = 1,
    ) -> NCPoly:
        return normalize(algebra, n_vars, [(c, CoeffWord(tuple(coeffs), tuple(letters)))])

    @staticmethod
    def word(algebra: CoeffAlgebra, n_vars: int, w: Word, c: ScalarLike = 1) -> NCPoly:
        return NCPoly.from_terms(algebra, n_vars, [(w, c)])

    @cached_property
    def as_dict(self) -> dict[Word, Scalar]:
        return dict(self.terms)

    def coefficient(self, w: Word) -> Scalar:
        return self.as_dict.get(w, sympy.Integer(0))

    def is_zero(self) -> bool:
        return len(self.terms) == 0

    @property
    def degree(self) -> int | None:
        """Total letter degree; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(w.degree for w, _ in self.terms)

    def check_compatible(self, other: NCPoly) -> None:
        if self.algebra != other.algebra:
            raise AlgebraMismatchError(
                f"Coefficient algebras differ: {self.algebra} and {other.algebra}."
            )
        if self.n_vars != other.n_vars:
            raise AlgebraMismatchError(
                f"Variable counts differ: {self.n_vars} and {other.n_vars}."
            )

    def with_terms(self, terms: Iterable[tuple[Word, ScalarLike]]) -> NCPoly:
        return NCPoly.from_terms(self.algebra, self.n_vars, terms)

    def map_words(self, image: Callable[[Word], WordImage]) -> NCPoly:
        """Extends a map on basis words linearly."""
        return self.with_terms(
            (w2, c * c2) for w, c in self.terms for w2, c2 in image(w)
        )

    def scale(self, c: ScalarLike) -> NCPoly:
        s = coerce_scalar(c)
        return self.with_terms((w, v * s) for w, v in self.terms)

    def __add__(self, other: NCPoly) -> NCPoly:
        self.check_compatible(other)
        return self.with_terms(itertools.chain(self.terms, other.terms))

    def __sub__(self, other: NCPoly) -> NCPoly:
        return self + (-other)

    def __neg__(self) -> NCPoly:
        return self.scale(-1)

    def __mul__(self, other: Union[NCPoly, ScalarLike]) -> NCPoly:
        if isinstance(other, NCPoly):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other: ScalarLike) -> NCPoly:
        return self.scale(other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.n_vars == other.n_vars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.algebra, self.n_vars, self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c})*{format_word(self.algebra, w)}" for w, c in self.terms
        )

    def __repr__(self) -> str:
        return f"NCPoly({self})"


def format_word(algebra: CoeffAlgebra, w: Word) -> str:
    def coeff(index: int) -> str:
        if algebra.is_scalar:
            return ""
        a, b = divmod(index, algebra.k)
        return f"e{a + 1}{b + 1}"

    parts = [coeff(w.basis_indices[0])]
    for letter, index in zip(w.letters, w.basis_indices[1:]):
        parts.append(f"X{letter}")
        parts.append(coeff(index))
    text = " ".join(p for p in parts if p)
    return text or "1"


def normalize(
    algebra: CoeffAlgebra,
    n_vars: int,
    raw: Iterable[tuple[ScalarLike, CoeffWord]],
) -> NCPoly:
    """Expands every general coefficient over the basis, merges equal words and drops zeros."""
    terms: list[tuple[Word, Scalar]] = []
    for c, cw in raw:
        if len(cw.coeffs) != len(cw.letters) + 1:
            raise MalformedWordError(
                f"A word with {len(cw.letters)} letters needs {len(cw.letters) + 1}"
                f" coefficients, got {len(cw.coeffs)}."
            )
        scalar = coerce_scalar(c)
        expansions = [algebra.decompose(b) for b in cw.coeffs]
        for choice in itertools.product(*expansions):
            value = scalar
            for _, v in choice:
                value = value * v
            terms.append((Word(tuple(i for i, _ in choice), tuple(cw.letters)), value))
    return NCPoly.from_terms(algebra, n_vars, terms)


def add(p: NCPoly, q: NCPoly) -> NCPoly:
    return p + q


def scale(c: ScalarLike, p: NCPoly) -> NCPoly:
    return p.scale(c)


def mul(p: NCPoly, q: NCPoly) -> NCPoly:
    p.check_compatible(q)
    terms: list[tuple[Word, Scalar]] = []
    for w1, c1 in p.terms:
        for w2, c2 in q.terms:
            w = concat(p.algebra, w1, w2)
            if w is not None:
                terms.append((w, c1 * c2))
    return p.with_terms(terms)


def homogeneous_components(p: NCPoly, var: int | None = None) -> dict[int, NCPoly]:
    """Splits p by total degree, or by the degree in `var` when given. Zero maps to {}."""
    groups: dict[int, list[tuple[Word, Scalar]]] = {}
    for w, c in p.terms:
        d = w.degree if var is None else w.degree_in(var)
        groups.setdefault(d, []).append((w, c))
    return {
        d: NCPoly(p.algebra, p.n_vars, tuple(items)) for d, items in sorted(groups.items())
    }


def commutator(p: NCPoly, q: NCPoly) -> NCPoly:
    return p * q - q * p
