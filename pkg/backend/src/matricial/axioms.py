from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import block_diag
from sanic.log import logger

from ncpoly import NCPoly
from util import thread_count

from .delta import relative_residual
from .evaluate import GeneratorMap, evaluate
from .point import EvalMode, MatrixPoint, direct_sum, random_matrix, random_point, similar


@dataclass(frozen=True)
class AxiomTrial:
    direct_sum_residual: float
    similarity_residual: float
    condition: float
    """Condition number of the similarity S."""


@dataclass
class AxiomReport:
    tol: float
    trials: list[AxiomTrial] = field(default_factory=list)

    @property
    def max_direct_sum_residual(self) -> float:
        return max((t.direct_sum_residual for t in self.trials), default=0.0)

    @property
    def max_scaled_similarity_residual(self) -> float:
        return max(
            (t.similarity_residual / t.condition for t in self.trials), default=0.0
        )

    @property
    def passed(self) -> bool:
        return all(
            t.direct_sum_residual <= self.tol
            and t.similarity_residual <= self.tol * t.condition
            for t in self.trials
        )


@dataclass(frozen=True)
class _TrialInput:
    x: MatrixPoint
    y: MatrixPoint
    s: np.ndarray


def _draw(
    rng: np.random.Generator, p: NCPoly, mode: EvalMode, k: int, max_level: int
) -> _TrialInput:
    n_mats = 1 if mode == EvalMode.Z_VALUED else p.n_vars
    n1 = int(rng.integers(1, max_level + 1))
    n2 = int(rng.integers(1, max_level + 1))
    x = random_point(rng, n1, k, n_mats)
    y = random_point(rng, n2, k, n_mats)
    # well conditioned: a shifted Ginibre matrix
    s = np.eye(n1) * 2 + random_matrix(rng, n1, n1)
    return _TrialInput(x, y, s)


def _run_trial(
    p: NCPoly, mode: EvalMode, generator_map: GeneratorMap | None, t: _TrialInput
) -> AxiomTrial:
    fx = evaluate(p, t.x, mode, generator_map)
    fy = evaluate(p, t.y, mode, generator_map)
    f_sum = evaluate(p, direct_sum(t.x, t.y), mode, generator_map)
    ds = relative_residual(f_sum, block_diag(fx, fy))

    f_sim = evaluate(p, similar(t.x, t.s), mode, generator_map)
    big = t.s if mode == EvalMode.Z_VALUED else np.kron(t.s, np.eye(t.x.k))
    expected = big @ fx @ np.linalg.inv(big)
    sim = relative_residual(f_sim, expected)
    return AxiomTrial(ds, sim, float(np.linalg.cond(t.s)))


def check_nc_axioms(
    p: NCPoly,
    mode: EvalMode,
    rng: np.random.Generator,
    trials: int,
    k: int | None = None,
    max_level: int = 4,
    tol: float = 1e-9,
    generator_map: GeneratorMap | None = None,
) -> AxiomReport:
    """
    Samples X, Y and an invertible S and checks f(X (+) Y) = f(X) (+) f(Y) and
    f(S X S^-1) = S f(X) S^-1. Inputs are drawn up front, so the report does not depend
    on the number of workers.
    """
    k = p.algebra.k if k is None else k
    inputs = [_draw(rng, p, mode, k, max_level) for _ in range(trials)]
    with ThreadPoolExecutor(max_workers=thread_count()) as pool:
        results = list(pool.map(lambda t: _run_trial(p, mode, generator_map, t), inputs))
    report = AxiomReport(tol=tol, trials=results)
    if not report.passed:
        logger.warning(
            f"nc axioms: direct sum residual {report.max_direct_sum_residual:.3e},"
            f" scaled similarity residual {report.max_scaled_similarity_residual:.3e}"
        )
    return report
