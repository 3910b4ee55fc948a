from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

import numpy as np
from scipy.linalg import block_diag


class EvaluationError(ValueError):
    pass


class EvalMode(Enum):
    B_VALUED = "b"
    """p in B<X> evaluated into M_N(C) (x) B; letter j takes the j-th matrix."""
    Z_VALUED = "z"
    """Scalar-coefficient p with letters z(phi_j), evaluated into M_N(C) at a single beta."""


@dataclass(frozen=True)
class MatrixPoint:
    """
    A level-N point of M(B): matrices of size N*k, read as N x N arrays of k x k
    blocks. In Z-valued mode the point holds a single matrix beta.
    """

    level: int
    k: int
    mats: tuple[np.ndarray, ...]

    def __post_init__(self):
        if self.level < 1 or self.k < 1:
            raise EvaluationError(
                f"Level and k must be positive, got N={self.level}, k={self.k}."
            )
        for m in self.mats:
            if m.shape != (self.dim, self.dim):
                raise EvaluationError(
                    f"Expected {self.dim}x{self.dim} matrices at level {self.level} with"
                    f" k={self.k}, got {m.shape}."
                )

    @staticmethod
    def of(level: int, k: int, mats: Sequence[np.ndarray]) -> MatrixPoint:
        return MatrixPoint(
            level, k, tuple(np.asarray(m, dtype=np.complex128) for m in mats)
        )

    @property
    def dim(self) -> int:
        return self.level * self.k

    @property
    def n_vars(self) -> int:
        return len(self.mats)


def random_matrix(
    rng: np.random.Generator, rows: int, cols: int, norm: float = 1.0
) -> np.ndarray:
    """A Ginibre matrix rescaled to the given operator norm."""
    g = rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))
    s = np.linalg.norm(g, ord=2)
    return g * (norm / s) if s > 0 else g


def random_point(
    rng: np.random.Generator, level: int, k: int, n_vars: int, norm: float = 1.0
) -> MatrixPoint:
    dim = level * k
    return MatrixPoint(
        level, k, tuple(random_matrix(rng, dim, dim, norm) for _ in range(n_vars))
    )


def direct_sum(a: MatrixPoint, b: MatrixPoint) -> MatrixPoint:
    if a.k != b.k or a.n_vars != b.n_vars:
        raise EvaluationError("Direct sums need points over the same B with the same letters.")
    return MatrixPoint(
        a.level + b.level,
        a.k,
        tuple(block_diag(x, y) for x, y in zip(a.mats, b.mats)),
    )


def similar(pt: MatrixPoint, s: np.ndarray) -> MatrixPoint:
    """(S (x) I_k) X (S (x) I_k)^-1 for every matrix of the point."""
    if s.shape != (pt.level, pt.level):
        raise EvaluationError(f"Expected a {pt.level}x{pt.level} similarity, got {s.shape}.")
    big = np.kron(s, np.eye(pt.k))
    inv = np.linalg.inv(big)
    return MatrixPoint(pt.level, pt.k, tuple(big @ m @ inv for m in pt.mats))
