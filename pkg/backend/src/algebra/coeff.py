from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np
import sympy

from .gell_mann import gell_mann_matrices
from .scalar import ZERO, Scalar, ScalarLike, to_scalar


class AlgebraMismatchError(ValueError):
    pass


class DimensionMismatchError(ValueError):
    pass


class AlgebraKind(Enum):
    SCALAR = "scalar"
    MATRIX = "matrix"


def _expanded(m: sympy.MatrixBase) -> sympy.ImmutableMatrix:
    return sympy.ImmutableMatrix(m.applyfunc(sympy.expand))


@dataclass(frozen=True)
class CoeffElem:
    """An element of B: a k x k matrix of exact scalars (k = 1 for the scalar algebra)."""

    entries: sympy.ImmutableMatrix

    def __post_init__(self):
        if self.entries.rows != self.entries.cols:
            raise DimensionMismatchError(
                f"Coefficients must be square, got {self.entries.rows}x{self.entries.cols}."
            )

    @property
    def k(self) -> int:
        return self.entries.rows

    @staticmethod
    def from_rows(rows: Sequence[Sequence[ScalarLike]]) -> CoeffElem:
        return CoeffElem(
            sympy.ImmutableMatrix([[to_scalar(x) for x in row] for row in rows])
        )

    @staticmethod
    def scalar(value: ScalarLike) -> CoeffElem:
        return CoeffElem(sympy.ImmutableMatrix([[to_scalar(value)]]))

    @staticmethod
    def identity(k: int) -> CoeffElem:
        return CoeffElem(sympy.ImmutableMatrix(sympy.eye(k)))

    @staticmethod
    def unit(k: int, row: int, col: int) -> CoeffElem:
        """The matrix unit e_{row,col} (0-based)."""
        m = sympy.zeros(k, k)
        m[row, col] = 1
        return CoeffElem(sympy.ImmutableMatrix(m))

    def __mul__(self, other: CoeffElem) -> CoeffElem:
        return coeff_mul(self, other)

    def __add__(self, other: CoeffElem) -> CoeffElem:
        if self.k != other.k:
            raise DimensionMismatchError(f"Cannot add {self.k}x{self.k} and {other.k}x{other.k}.")
        return CoeffElem(_expanded(self.entries + other.entries))

    def scaled(self, c: ScalarLike) -> CoeffElem:
        return CoeffElem(_expanded(self.entries * to_scalar(c)))

    def to_numpy(self) -> np.ndarray:
        return np.array(
            [[complex(self.entries[i, j]) for j in range(self.k)] for i in range(self.k)],
            dtype=np.complex128,
        )


def coeff_mul(a: CoeffElem, b: CoeffElem) -> CoeffElem:
    if a.k != b.k:
        raise DimensionMismatchError(
            f"Cannot multiply coefficients of size {a.k} and {b.k}."
        )
    return CoeffElem(_expanded(a.entries * b.entries))


@dataclass(frozen=True)
class Functional:
    """
    A linear functional on B, stored by its values on the matrix-unit basis.

    For phi(X) = Tr_k(X alpha^t) the value on e_{ab} is alpha_{ab}.
    """

    values_on_basis: tuple[Scalar, ...]

    @property
    def k(self) -> int:
        k = round(len(self.values_on_basis) ** 0.5)
        assert k * k == len(self.values_on_basis)
        return k

    @property
    def matrix(self) -> sympy.ImmutableMatrix:
        """The matrix alpha with phi(X) = Tr_k(X alpha^t)."""
        k = self.k
        return sympy.ImmutableMatrix(k, k, list(self.values_on_basis))

    def to_numpy(self) -> np.ndarray:
        k = self.k
        return np.array(
            [complex(v) for v in self.values_on_basis], dtype=np.complex128
        ).reshape(k, k)


def apply_functional(phi: Functional, a: CoeffElem) -> Scalar:
    if len(phi.values_on_basis) != a.k * a.k:
        raise DimensionMismatchError(
            f"Functional on M_{phi.k} applied to a {a.k}x{a.k} coefficient."
        )
    k = a.k
    total = ZERO
    for i in range(k):
        for j in range(k):
            total += a.entries[i, j] * phi.values_on_basis[i * k + j]
    return sympy.expand(total)


@lru_cache(maxsize=None)
def dual_basis(k: int) -> tuple[Functional, ...]:
    """
    phi_1(X) = Tr_k(X k^-1 I_k) followed by phi_j(X) = Tr_k(X alpha_j^t) for the
    Hilbert-Schmidt normalized generalized Gell-Mann matrices alpha_j.
    """
    assert k >= 1, "k must be positive"
    theta = [ZERO] * (k * k)
    for i in range(k):
        theta[i * k + i] = sympy.Rational(1, k)
    result = [Functional(tuple(theta))]
    for alpha in gell_mann_matrices(k):
        result.append(
            Functional(tuple(sympy.expand(alpha[i, j]) for i in range(k) for j in range(k)))
        )
    return tuple(result)


@lru_cache(maxsize=None)
def _dual_matrix(k: int) -> tuple[sympy.ImmutableMatrix, sympy.ImmutableMatrix]:
    m = sympy.ImmutableMatrix([list(phi.values_on_basis) for phi in dual_basis(k)])
    return m, _expanded(m.inv())


@dataclass(frozen=True)
class CoeffAlgebra:
    """The coefficient algebra B: either C or M_k(C), with the matrix-unit basis."""

    kind: AlgebraKind
    k: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise DimensionMismatchError(f"k must be positive, got {self.k}.")
        if self.kind == AlgebraKind.SCALAR and self.k != 1:
            raise DimensionMismatchError("The scalar algebra has k = 1.")

    @staticmethod
    def scalar() -> CoeffAlgebra:
        return CoeffAlgebra(AlgebraKind.SCALAR, 1)

    @staticmethod
    def matrix(k: int) -> CoeffAlgebra:
        return CoeffAlgebra(AlgebraKind.MATRIX, k)

    @property
    def is_scalar(self) -> bool:
        return self.kind == AlgebraKind.SCALAR

    @property
    def dim(self) -> int:
        return self.k * self.k

    @cached_property
    def basis(self) -> tuple[CoeffElem, ...]:
        """Matrix units e_{ab} in row-major order; index a*k + b."""
        return tuple(
            CoeffElem.unit(self.k, a, b) for a in range(self.k) for b in range(self.k)
        )

    @property
    def dual_basis(self) -> tuple[Functional, ...]:
        return dual_basis(self.k)

    @cached_property
    def unit_indices(self) -> tuple[int, ...]:
        """Basis indices whose sum is 1_B."""
        return tuple(a * self.k + a for a in range(self.k))

    @cached_property
    def basis_matrices(self) -> tuple[np.ndarray, ...]:
        return tuple(b.to_numpy() for b in self.basis)

    def mul_basis(self, i: int, j: int) -> int | None:
        """e_{ab} e_{cd} = delta_{bc} e_{ad}. Returns None for a zero product."""
        a, b = divmod(i, self.k)
        c, d = divmod(j, self.k)
        if b != c:
            return None
        return a * self.k + d

    def check_index(self, i: int) -> bool:
        return 0 <= i < self.dim

    def decompose(self, a: CoeffElem) -> list[tuple[int, Scalar]]:
        if a.k != self.k:
            raise DimensionMismatchError(
                f"A {a.k}x{a.k} coefficient is not an element of M_{self.k}."
            )
        result: list[tuple[int, Scalar]] = []
        for r in range(self.k):
            for c in range(self.k):
                v = sympy.expand(a.entries[r, c])
                if v != 0:
                    result.append((r * self.k + c, v))
        return result

    def element(self, index: int) -> CoeffElem:
        return self.basis[index]

    def combine(self, parts: Iterable[tuple[int, ScalarLike]]) -> CoeffElem:
        m = sympy.zeros(self.k, self.k)
        for index, value in parts:
            r, c = divmod(index, self.k)
            m[r, c] += to_scalar(value)
        return CoeffElem(_expanded(m))

    def one(self) -> CoeffElem:
        return CoeffElem.identity(self.k)

    def dual_coordinates(self, a: CoeffElem) -> tuple[Scalar, ...]:
        """(phi_1(a), ..., phi_{k^2}(a))"""
        return tuple(apply_functional(phi, a) for phi in self.dual_basis)

    def from_dual_coordinates(self, coords: Sequence[ScalarLike]) -> CoeffElem:
        """Inverse of `dual_coordinates`, computed with the exact inverse basis change."""
        if len(coords) != self.dim:
            raise DimensionMismatchError(
                f"Expected {self.dim} dual coordinates, got {len(coords)}."
            )
        _, inverse = _dual_matrix(self.k)
        vec = inverse * sympy.Matrix([to_scalar(c) for c in coords])
        return self.combine((i, vec[i]) for i in range(self.dim))


