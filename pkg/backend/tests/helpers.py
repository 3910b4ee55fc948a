from __future__ import annotations

import numpy as np

from algebra import CoeffAlgebra, CoeffElem
from ncpoly import NCPoly


def unit(k: int, row: int, col: int) -> CoeffElem:
    """e_{row col} with 1-based indices."""
    return CoeffElem.unit(k, row - 1, col - 1)


def x_of(algebra: CoeffAlgebra, n_vars: int = 1, i: int = 1) -> NCPoly:
    return NCPoly.var(algebra, n_vars, i)


def const(algebra: CoeffAlgebra, b: CoeffElem, n_vars: int = 1) -> NCPoly:
    return NCPoly.constant(algebra, n_vars, b)


BATCH_SEEDS = range(50)
"""Seeds of the randomized batches. Each batch runs once per coefficient algebra."""


def random_letters(rng: np.random.Generator, max_vars: int = 3) -> tuple[int, int]:
    """(n_vars, i): up to `max_vars` letters and one of them to differentiate by."""
    n_vars = int(rng.integers(1, max_vars + 1))
    return n_vars, int(rng.integers(1, n_vars + 1))
