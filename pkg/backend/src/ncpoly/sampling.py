from __future__ import annotations

import numpy as np
import sympy

from algebra import CoeffAlgebra, Scalar

from .poly import NCPoly
from .tensor import TensorPoly
from .word import Word


def random_scalar(rng: np.random.Generator, complex_values: bool = True) -> Scalar:
    """A small nonzero Gaussian rational."""
    while True:
        re = sympy.Rational(int(rng.integers(-3, 4)), int(rng.integers(1, 3)))
        im = sympy.Integer(int(rng.integers(-2, 3))) if complex_values else 0
        value = sympy.expand(re + im * sympy.I)
        if value != 0:
            return value


def random_word(
    rng: np.random.Generator,
    algebra: CoeffAlgebra,
    n_vars: int,
    degree: int,
    var: int | None = None,
) -> Word:
    """A uniformly random basis word. With `var` every letter is X_var."""
    letters = tuple(
        var if var is not None else int(rng.integers(1, n_vars + 1)) for _ in range(degree)
    )
    indices = tuple(int(rng.integers(0, algebra.dim)) for _ in range(degree + 1))
    return Word(indices, letters)


def random_poly(
    rng: np.random.Generator,
    algebra: CoeffAlgebra,
    n_vars: int,
    max_degree: int,
    n_terms: int = 4,
    min_degree: int = 0,
    var: int | None = None,
    complex_values: bool = True,
) -> NCPoly:
    terms = [
        (
            random_word(
                rng, algebra, n_vars, int(rng.integers(min_degree, max_degree + 1)), var
            ),
            random_scalar(rng, complex_values),
        )
        for _ in range(n_terms)
    ]
    return NCPoly.from_terms(algebra, n_vars, terms)


def random_homogeneous(
    rng: np.random.Generator,
    algebra: CoeffAlgebra,
    n_vars: int,
    degree: int,
    n_terms: int = 3,
) -> NCPoly:
    return random_poly(
        rng, algebra, n_vars, degree, n_terms=n_terms, min_degree=degree
    )


def random_tensor(
    rng: np.random.Generator,
    algebra: CoeffAlgebra,
    n_vars: int,
    max_degree: int,
    n_terms: int = 4,
) -> TensorPoly:
    terms = []
    for _ in range(n_terms):
        d1 = int(rng.integers(0, max_degree + 1))
        d2 = int(rng.integers(0, max_degree - d1 + 1))
        terms.append(
            (
                (
                    random_word(rng, algebra, n_vars, d1),
                    random_word(rng, algebra, n_vars, d2),
                ),
                random_scalar(rng),
            )
        )
    return TensorPoly.from_terms(algebra, n_vars, terms)
