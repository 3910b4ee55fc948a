from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from algebra import CoeffAlgebra


class MalformedWordError(ValueError):
    pass


@dataclass(frozen=True)
class Word:
    """
    A monomial b_0 X_{l_1} b_1 ... X_{l_m} b_m.

    `basis_indices` holds the m+1 coefficient slots as indices into the basis of the
    coefficient algebra; `letters` holds the m letter indices (1-based).
    """

    basis_indices: tuple[int, ...]
    letters: tuple[int, ...]

    def __post_init__(self):
        if len(self.basis_indices) != len(self.letters) + 1:
            raise MalformedWordError(
                f"A word with {len(self.letters)} letters needs {len(self.letters) + 1}"
                f" coefficient slots, got {len(self.basis_indices)}."
            )
        for letter in self.letters:
            if letter < 1:
                raise MalformedWordError(f"Letter indices start at 1, got {letter}.")
        for index in self.basis_indices:
            if index < 0:
                raise MalformedWordError(f"Negative basis index {index}.")

    @staticmethod
    def constant(index: int) -> Word:
        return Word((index,), ())

    @property
    def degree(self) -> int:
        return len(self.letters)

    def degree_in(self, var: int) -> int:
        return sum(1 for letter in self.letters if letter == var)

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
        return (self.degree, self.letters, self.basis_indices)

    def check(self, algebra: CoeffAlgebra, n_vars: int) -> None:
        for index in self.basis_indices:
            if not algebra.check_index(index):
                raise MalformedWordError(
                    f"Basis index {index} out of range for an algebra of dimension {algebra.dim}."
                )
        for letter in self.letters:
            if letter > n_vars:
                raise MalformedWordError(
                    f"Letter {letter} out of range for {n_vars} variable(s)."
                )

    def split_at(self, position: int) -> tuple[Word, Word]:
        """
        Splits the word at the letter with the given 0-based position. The letter
        itself is dropped; its left coefficient ends the left part and its right
        coefficient starts the right part.
        """
        assert 0 <= position < self.degree
        left = Word(self.basis_indices[: position + 1], self.letters[:position])
        right = Word(self.basis_indices[position + 1 :], self.letters[position + 1 :])
        return left, right

    def positions_of(self, var: int) -> list[int]:
        return [p for p, letter in enumerate(self.letters) if letter == var]


def concat(algebra: CoeffAlgebra, a: Word, b: Word) -> Word | None:
    """Fuses the last coefficient of `a` with the first of `b`. None if that product is zero."""
    fused = algebra.mul_basis(a.basis_indices[-1], b.basis_indices[0])
    if fused is None:
        return None
    return Word(
        a.basis_indices[:-1] + (fused,) + b.basis_indices[1:],
        a.letters + b.letters,
    )


def concat_all(algebra: CoeffAlgebra, words: Iterable[Word]) -> Word | None:
    result: Word | None = None
    for w in words:
        if result is None:
            result = w
        else:
            result = concat(algebra, result, w)
            if result is None:
                return None
    return result


def letter_word(algebra: CoeffAlgebra, var: int) -> list[Word]:
    """The words of 1 X_var 1 = sum_{a,b} e_aa X_var e_bb."""
    return [Word((a, b), (var,)) for a in algebra.unit_indices for b in algebra.unit_indices]
