from __future__ import annotations

import numpy as np
import pytest

from algebra import CoeffAlgebra


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def scalars() -> CoeffAlgebra:
    return CoeffAlgebra.scalar()


@pytest.fixture
def m2() -> CoeffAlgebra:
    return CoeffAlgebra.matrix(2)


@pytest.fixture(params=["scalar", "matrix2"])
def algebra(request: pytest.FixtureRequest) -> CoeffAlgebra:
    """Both coefficient algebras the randomized identity batches run over."""
    return CoeffAlgebra.scalar() if request.param == "scalar" else CoeffAlgebra.matrix(2)
