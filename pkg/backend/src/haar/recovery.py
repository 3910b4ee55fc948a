from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np
from sanic.log import logger

from algebra import CoeffAlgebra, to_complex
from calculus import grading_op, number_op2
from matricial import GeneratorMap, functional_index
from ncpoly import NCPoly, TensorPoly, homogeneous_components, random_poly, random_tensor

from .moments import (
    ZERO_BAND_STDERRS,
    FunctionalWord,
    GeneratorCache,
    HaarConfig,
    HaarEstimate,
    all_words,
    estimate,
    limit_target,
    normalized_trace,
    theta_count,
)

RECOVERY_BAND = 0.1


def functional_word(letters: tuple[int, ...], generator_map: GeneratorMap | None) -> FunctionalWord:
    return tuple(functional_index(letter, generator_map) for letter in letters)


def exact_coefficients(
    p: NCPoly, generator_map: GeneratorMap | None = None
) -> dict[FunctionalWord, complex]:
    """The coefficients of p as a polynomial in the generators z(phi_j)."""
    if not p.algebra.is_scalar:
        raise ValueError("Coefficient recovery needs a scalar-coefficient polynomial.")
    coeffs: dict[FunctionalWord, complex] = {}
    for w, c in p.terms:
        key = functional_word(w.letters, generator_map)
        coeffs[key] = coeffs.get(key, 0j) + to_complex(c)
    return coeffs


@dataclass(frozen=True)
class RecoveredCoefficient:
    word: FunctionalWord
    estimate: HaarEstimate
    """Estimate of the scaled coefficient a(w) k^-#theta."""
    scale: float
    exact: complex

    @property
    def recovered(self) -> complex:
        return self.estimate.mean / self.scale

    @property
    def deviation(self) -> float:
        return abs(self.estimate.mean - self.exact * self.scale)

    @property
    def passed(self) -> bool:
        return self.deviation <= RECOVERY_BAND + ZERO_BAND_STDERRS * self.estimate.stderr

    def divided(self, eigenvalue: int, exact: complex) -> RecoveredCoefficient:
        est = self.estimate
        return RecoveredCoefficient(
            word=self.word,
            estimate=replace(est, mean=est.mean / eigenvalue, stderr=est.stderr / eigenvalue),
            scale=self.scale,
            exact=exact,
        )


@dataclass
class RecoveryReport:
    config: HaarConfig
    entries: list[RecoveredCoefficient] = field(default_factory=list)

    def by_word(self) -> dict[FunctionalWord, RecoveredCoefficient]:
        return {e.word: e for e in self.entries}

    @property
    def failures(self) -> list[RecoveredCoefficient]:
        return [e for e in self.entries if not e.passed]

    @property
    def passed(self) -> bool:
        return not self.failures


def recover_coefficients(
    p: NCPoly,
    max_deg: int,
    cfg: HaarConfig,
    generator_map: GeneratorMap | None = None,
) -> RecoveryReport:
    """
    Pairs f = p(z(phi_1), ..., z(phi_{k^2})) with every word of length <= max_deg under
    the normalized trace. In the large-N limit the pairing with word w is
    a(w) k^-#theta(w), so dividing by that weight recovers the coefficient a(w).
    """
    exact = exact_coefficients(p, generator_map)
    degree = p.degree
    if degree is not None and degree > max_deg:
        raise ValueError(f"Polynomial of degree {degree} exceeds max_deg={max_deg}.")
    for w in exact:
        cfg.check_word(w)

    words = all_words(cfg.k, max_deg)
    terms = list(exact.items())

    def integrand(g: GeneratorCache) -> np.ndarray:
        f = np.zeros((cfg.N, cfg.N), dtype=np.complex128)
        for w, c in terms:
            f = f + c * g.word(w)
        return np.array([normalized_trace(f, g.word(w)) for w in words])

    estimates = estimate(integrand, cfg)
    report = RecoveryReport(config=cfg)
    for w, est in zip(words, estimates):
        report.entries.append(
            RecoveredCoefficient(
                word=w,
                estimate=est,
                scale=limit_target(w, w, cfg),
                exact=exact.get(w, 0j),
            )
        )
    for e in report.failures:
        logger.warning(
            f"Recovered coefficient of {e.word} is {e.recovered:.4f}, expected {e.exact:.4f}"
        )
    return report


class InjectivityOperator(Enum):
    GRADING = "grading"
    NUMBER2 = "number2"


@dataclass
class InjectivityReport:
    operator: InjectivityOperator
    trials: int
    violations: list[str] = field(default_factory=list)
    recovery: RecoveryReport | None = None
    """Statistical part. Only the grading operator acts on single polynomials, so only it has one."""

    @property
    def passed(self) -> bool:
        return not self.violations and (self.recovery is None or self.recovery.passed)


def _bidegree_components(u: TensorPoly, var: int) -> dict[tuple[int, int], TensorPoly]:
    groups: dict[tuple[int, int], list] = {}
    for (a, c), v in u.terms:
        groups.setdefault((a.degree_in(var), c.degree_in(var)), []).append(((a, c), v))
    return {key: u.with_terms(items) for key, items in sorted(groups.items())}


def _check_grading(p: NCPoly, report: InjectivityReport) -> None:
    for d, comp in homogeneous_components(p, var=1).items():
        if grading_op(comp, 1) != comp * (d + 1):
            report.violations.append(f"L is not {d + 1} on the theta-degree {d} part of {p}")
    if grading_op(p, 1).is_zero() and not p.is_zero():
        report.violations.append(f"L annihilates the nonzero polynomial {p}")


def _check_number2(u: TensorPoly, report: InjectivityReport) -> None:
    for (n, m), comp in _bidegree_components(u, 1).items():
        if number_op2(comp, 1) != comp * (n + m + 1):
            report.violations.append(f"N2 is not {n + m + 1} on bidegree ({n}, {m}) of {u}")
    if number_op2(u, 1).is_zero() and not u.is_zero():
        report.violations.append(f"N2 annihilates the nonzero tensor {u}")


def injectivity_evidence(
    op: InjectivityOperator,
    trials: int,
    rng: np.random.Generator,
    max_degree: int = 3,
    cfg: HaarConfig | None = None,
    n_letters: int = 2,
) -> InjectivityReport:
    """
    Exact part: on random inputs the operator acts on every theta-(bi)degree component
    by an eigenvalue >= 1, so it has no kernel on polynomials. Statistical part (grading
    only, when `cfg` is given): the Haar pairing of L[p], divided by the eigenvalue of
    each word, reproduces the scaled coefficients of p.
    """
    algebra = CoeffAlgebra.scalar()
    n_vars = cfg.k * cfg.k if cfg is not None else n_letters
    report = InjectivityReport(operator=op, trials=trials)
    for _ in range(trials):
        if op == InjectivityOperator.GRADING:
            _check_grading(random_poly(rng, algebra, n_vars, max_degree), report)
        else:
            _check_number2(random_tensor(rng, algebra, n_vars, max_degree), report)
    logger.info(
        f"{op.value} injectivity: {trials} trial(s), {len(report.violations)} violation(s)"
    )

    if cfg is not None and op == InjectivityOperator.GRADING:
        p = random_poly(rng, algebra, n_vars, min(max_degree, 2), n_terms=2)
        q = grading_op(p, 1)
        scaled = recover_coefficients(q, p.degree or 0, cfg)
        exact = exact_coefficients(p)
        report.recovery = RecoveryReport(
            config=cfg,
            entries=[
                e.divided(theta_count(e.word) + 1, exact.get(e.word, 0j))
                for e in scaled.entries
            ],
        )
    return report
