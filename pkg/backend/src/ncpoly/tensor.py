from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, ClassVar, Iterable, TypeVar, Union

from algebra import AlgebraMismatchError, CoeffAlgebra, Scalar, ScalarLike

from .poly import NCPoly, accumulate, canonical_items, coerce_scalar, format_word
from .word import MalformedWordError, Word, concat

WordTuple = tuple[Word, ...]
TupleImage = Iterable[tuple[WordTuple, Scalar]]

T = TypeVar("T", bound="TensorBase")


@dataclass(frozen=True, eq=False)
class TensorBase:
    """Normal form of an element of B<X>^{(x)arity}: sorted word tuples with nonzero scalars."""

    algebra: CoeffAlgebra
    n_vars: int
    terms: tuple[tuple[WordTuple, Scalar], ...]

    arity: ClassVar[int] = 0

    @classmethod
    def from_terms(
        cls: type[T],
        algebra: CoeffAlgebra,
        n_vars: int,
        terms: Iterable[tuple[WordTuple, ScalarLike]],
    ) -> T:
        acc: dict[WordTuple, Scalar] = {}
        for words, c in terms:
            if len(words) != cls.arity:
                raise MalformedWordError(
                    f"{cls.__name__} needs {cls.arity} tensor factors, got {len(words)}."
                )
            for w in words:
                w.check(algebra, n_vars)
            accumulate(acc, words, c)
        items = canonical_items(acc)
        items.sort(key=lambda kv: tuple(w.sort_key for w in kv[0]))
        return cls(algebra, n_vars, tuple(items))

    @classmethod
    def zero(cls: type[T], algebra: CoeffAlgebra, n_vars: int) -> T:
        return cls(algebra, n_vars, ())

    @cached_property
    def as_dict(self) -> dict[WordTuple, Scalar]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return len(self.terms) == 0

    def with_terms(self: T, terms: Iterable[tuple[WordTuple, ScalarLike]]) -> T:
        return type(self).from_terms(self.algebra, self.n_vars, terms)

    def check_compatible(self, other: TensorBase | NCPoly) -> None:
        if self.algebra != other.algebra or self.n_vars != other.n_vars:
            raise AlgebraMismatchError(
                f"Cannot combine tensors over ({self.algebra}, {self.n_vars}) and"
                f" ({other.algebra}, {other.n_vars})."
            )

    def scale(self: T, c: ScalarLike) -> T:
        s = coerce_scalar(c)
        return self.with_terms((ws, v * s) for ws, v in self.terms)

    def map_slot(self: T, slot: int, image: Callable[[Word], Iterable[tuple[Word, Scalar]]]) -> T:
        """Applies a linear map on words to one tensor factor."""
        return self.with_terms(
            (ws[:slot] + (w2,) + ws[slot + 1 :], c * c2)
            for ws, c in self.terms
            for w2, c2 in image(ws[slot])
        )

    def __add__(self: T, other: T) -> T:
        self.check_compatible(other)
        return self.with_terms(itertools.chain(self.terms, other.terms))

    def __sub__(self: T, other: T) -> T:
        return self + (-other)

    def __neg__(self: T) -> T:
        return self.scale(-1)

    def __mul__(self: T, other: ScalarLike) -> T:
        return self.scale(other)

    def __rmul__(self: T, other: ScalarLike) -> T:
        return self.scale(other)

    def left_act(self: T, p: NCPoly) -> T:
        """p . u: multiplies p into the first tensor factor from the left."""
        self.check_compatible(p)
        terms = []
        for wp, cp in p.terms:
            for ws, c in self.terms:
                w = concat(self.algebra, wp, ws[0])
                if w is not None:
                    terms.append(((w,) + ws[1:], cp * c))
        return self.with_terms(terms)

    def right_act(self: T, p: NCPoly) -> T:
        """u . p: multiplies p into the last tensor factor from the right."""
        self.check_compatible(p)
        terms = []
        for ws, c in self.terms:
            for wp, cp in p.terms:
                w = concat(self.algebra, ws[-1], wp)
                if w is not None:
                    terms.append((ws[:-1] + (w,), c * cp))
        return self.with_terms(terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorBase) or other.arity != self.arity:
            return NotImplemented
        return (
            self.algebra == other.algebra
            and self.n_vars == other.n_vars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.arity, self.algebra, self.n_vars, self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c})*" + " (x) ".join(f"[{format_word(self.algebra, w)}]" for w in ws)
            for ws, c in self.terms
        )


class TensorPoly(TensorBase):
    """An element of B<X> (x) B<X>."""

    arity: ClassVar[int] = 2

    def flip(self) -> TensorPoly:
        return self.with_terms(((ws[1], ws[0]), c) for ws, c in self.terms)

    def __repr__(self) -> str:
        return f"TensorPoly({self})"


class TensorPoly3(TensorBase):
    """An element of B<X> (x) B<X> (x) B<X>."""

    arity: ClassVar[int] = 3

    def __repr__(self) -> str:
        return f"TensorPoly3({self})"


def _product_terms(*factors: NCPoly) -> Iterable[tuple[WordTuple, Scalar]]:
    for combo in itertools.product(*(p.terms for p in factors)):
        c = coerce_scalar(1)
        for _, v in combo:
            c = c * v
        yield tuple(w for w, _ in combo), c


def _check_factors(factors: tuple[NCPoly, ...]) -> None:
    for p in factors[1:]:
        factors[0].check_compatible(p)


def tensor_of(p: NCPoly, q: NCPoly) -> TensorPoly:
    _check_factors((p, q))
    return TensorPoly.from_terms(p.algebra, p.n_vars, _product_terms(p, q))


def tensor3_of(p: NCPoly, q: NCPoly, r: NCPoly) -> TensorPoly3:
    _check_factors((p, q, r))
    return TensorPoly3.from_terms(p.algebra, p.n_vars, _product_terms(p, q, r))


AnyTensor = Union[TensorPoly, TensorPoly3]
