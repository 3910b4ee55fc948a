from __future__ import annotations

from functools import lru_cache
from typing import Mapping

import numpy as np

from algebra import CoeffAlgebra, Functional, dual_basis, to_complex
from ncpoly import NCPoly, Word

from .point import EvalMode, EvaluationError, MatrixPoint

GeneratorMap = Mapping[int, int]
"""Letter index -> dual basis index (both 1-based). Missing letters map to themselves."""


def z_of(phi: Functional, beta: np.ndarray, k: int) -> np.ndarray:
    """
    z(phi) applied blockwise: entry (a, b) is phi(beta_ab) for the k x k block beta_ab.
    Works for rectangular beta (n*k x m*k).
    """
    rows, cols = beta.shape
    if rows % k != 0 or cols % k != 0 or phi.k != k:
        raise EvaluationError(
            f"Cannot apply a functional on M_{phi.k} to a {rows}x{cols} matrix with k={k}."
        )
    n, m = rows // k, cols // k
    return np.einsum("aibj,ij->ab", beta.reshape(n, k, m, k), phi.to_numpy())


@lru_cache(maxsize=None)
def _functional_arrays(k: int) -> tuple[np.ndarray, ...]:
    return tuple(phi.to_numpy() for phi in dual_basis(k))


def functional_index(letter: int, generator_map: GeneratorMap | None) -> int:
    if generator_map is None:
        return letter
    return generator_map.get(letter, letter)


def z_letter(
    letter: int, beta: np.ndarray, k: int, generator_map: GeneratorMap | None = None
) -> np.ndarray:
    """z(phi_j)(beta) for the functional assigned to `letter`."""
    j = functional_index(letter, generator_map)
    if not 1 <= j <= k * k:
        raise EvaluationError(f"Functional index {j} out of range for k={k}.")
    rows, cols = beta.shape
    return np.einsum(
        "aibj,ij->ab",
        beta.reshape(rows // k, k, cols // k, k),
        _functional_arrays(k)[j - 1],
    )


class Evaluator:
    """Letter and coefficient matrices of one point; evaluates words and polynomials."""

    def __init__(
        self,
        algebra: CoeffAlgebra,
        letters: list[np.ndarray],
        coefficient_level: int,
    ) -> None:
        self.algebra = algebra
        self.letters = letters
        self.size = letters[0].shape[0] if letters else coefficient_level * algebra.k
        self.__coeffs = [
            np.kron(np.eye(coefficient_level), b) for b in algebra.basis_matrices
        ]

    @staticmethod
    def at(
        p: NCPoly,
        pt: MatrixPoint,
        mode: EvalMode,
        generator_map: GeneratorMap | None = None,
    ) -> Evaluator:
        return Evaluator(
            p.algebra,
            letter_matrices(p, pt, mode, generator_map),
            pt.level,
        )

    def word(self, w: Word) -> np.ndarray:
        result = self.__coeffs[w.basis_indices[0]]
        for letter, index in zip(w.letters, w.basis_indices[1:]):
            result = result @ self.letters[letter - 1] @ self.__coeffs[index]
        return result

    def poly(self, p: NCPoly) -> np.ndarray:
        result = np.zeros((self.size, self.size), dtype=np.complex128)
        for w, c in p.terms:
            result = result + to_complex(c) * self.word(w)
        return result


def check_mode(p: NCPoly, pt: MatrixPoint, mode: EvalMode) -> None:
    if mode == EvalMode.B_VALUED:
        if p.algebra.k != pt.k:
            raise EvaluationError(
                f"Polynomial over M_{p.algebra.k} evaluated at a point with k={pt.k}."
            )
        if pt.n_vars != p.n_vars:
            raise EvaluationError(
                f"Polynomial in {p.n_vars} letter(s) evaluated at {pt.n_vars} matrices."
            )
    else:
        if not p.algebra.is_scalar:
            raise EvaluationError("Z-valued evaluation needs scalar coefficients.")
        if pt.n_vars != 1:
            raise EvaluationError(
                f"Z-valued evaluation takes a single matrix, got {pt.n_vars}."
            )


def letter_matrices(
    p: NCPoly,
    pt: MatrixPoint,
    mode: EvalMode,
    generator_map: GeneratorMap | None = None,
) -> list[np.ndarray]:
    check_mode(p, pt, mode)
    if mode == EvalMode.B_VALUED:
        return list(pt.mats)
    beta = pt.mats[0]
    return [z_letter(j, beta, pt.k, generator_map) for j in range(1, p.n_vars + 1)]


def evaluate(
    p: NCPoly,
    pt: MatrixPoint,
    mode: EvalMode = EvalMode.B_VALUED,
    generator_map: GeneratorMap | None = None,
) -> np.ndarray:
    """
    The unital homomorphism p -> p(pt). In B-valued mode b maps to I_N (x) b; in
    Z-valued mode letter j maps to z(phi_j)(beta).
    """
    return Evaluator.at(p, pt, mode, generator_map).poly(p)
