from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sanic.log import logger

from algebra import CoeffAlgebra
from calculus import cyclic_derivative, theta_op, xi_theta
from ncpoly import NCPoly, homogeneous_components, random_poly

from .exactness import NotExact, antiderivative_cyclic


@dataclass
class AuditReport:
    samples: int
    violations: list[str] = field(default_factory=list)
    exact_inputs: int = 0
    """Random inputs that turned out to be cyclically exact."""

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, message: str) -> None:
        logger.warning(f"Exact sequence audit: {message}")
        self.violations.append(message)


def _check_delta_range(report: AuditReport, p: NCPoly) -> None:
    q = cyclic_derivative(p, 1)
    if not theta_op(q).is_zero():
        report.add(f"Theta[delta[p]] != 0 for p = {p}")
    if not xi_theta(q).is_zero():
        report.add(f"xi[X, delta[p]] != 0 for p = {p}")
    try:
        p2 = antiderivative_cyclic(q)
    except NotExact:
        report.add(f"no antiderivative found for delta[p], p = {p}")
        return
    if 0 in homogeneous_components(p2):
        report.add(f"antiderivative of delta[p] has a constant term, p = {p}")


def _check_verdicts(report: AuditReport, q: NCPoly) -> None:
    by_theta = theta_op(q).is_zero()
    by_xi = xi_theta(q).is_zero()
    if by_theta != by_xi:
        report.add(f"Theta and xi[X, .] disagree on q = {q}")
    try:
        antiderivative_cyclic(q)
        solved = True
    except NotExact:
        solved = False
    if solved != by_theta:
        report.add(f"solver ({solved}) and Theta ({by_theta}) disagree on q = {q}")
    if by_theta:
        report.exact_inputs += 1


def exact_sequence_audit(
    rng: np.random.Generator,
    algebra: CoeffAlgebra,
    samples: int,
    max_degree: int = 4,
) -> AuditReport:
    """
    Checks exactness of B -> B<X> -> B<X> -> B<X> (delta, then Theta) on random
    single-letter polynomials: Theta o delta = 0, every element of ker(Theta) has an
    antiderivative, and xi o [X, .] gives the same verdicts as Theta.
    """
    report = AuditReport(samples=samples)
    for _ in range(samples):
        p = random_poly(rng, algebra, 1, max_degree)
        _check_delta_range(report, p)
        _check_verdicts(report, random_poly(rng, algebra, 1, max_degree))
        # in ran(delta), hence in ker(Theta)
        _check_verdicts(report, cyclic_derivative(p, 1))
    logger.info(
        f"Exact sequence audit: {samples} sample(s), {len(report.violations)} violation(s)"
    )
    return report
