from __future__ import annotations

from typing import NamedTuple, Sequence, Union

import sympy
from sanic.log import logger

from calculus import (
    UnsupportedInputError,
    cyclic_derivative,
    cyclic_divergence,
    diff_tensor_left,
    diff_tensor_right,
    divergence,
    flip,
    free_diff,
    grading_op,
    number_op2,
    resolve_var,
    theta_op,
    theta_voiculescu,
)
from ncpoly import NCPoly, TensorPoly, homogeneous_components


class NotExact(Exception):
    pass


CyclicInput = Union[NCPoly, Sequence[NCPoly]]


def _as_tuple(q: CyclicInput) -> tuple[NCPoly, ...] | None:
    if isinstance(q, NCPoly):
        return None
    ps = tuple(q)
    if not ps:
        raise UnsupportedInputError("Expected at least one polynomial.")
    return ps


def _divide_by_degree(h: NCPoly, var: int | None) -> NCPoly:
    """sum_d h_d / d over the homogeneous components of h (d >= 1)."""
    result = NCPoly.zero(h.algebra, h.n_vars)
    for d, component in homogeneous_components(h, var).items():
        assert d >= 1, "the component of degree 0 must vanish"
        logger.debug(f"Antiderivative: component of degree {d} with {len(component.terms)} term(s)")
        result = result + component.scale(sympy.Rational(1, d))
    return result


def is_cyclically_exact(q: CyclicInput, var: int | None = None) -> bool:
    """
    Whether q lies in the range of the cyclic derivative.

    A single polynomial is decided by Theta (single letter, or relative to `var`). A
    tuple (q_1, ..., q_n) of scalar-coefficient polynomials is decided by the
    commutator map sum_j [X_j, q_j].
    """
    ps = _as_tuple(q)
    if ps is None:
        assert isinstance(q, NCPoly)
        return theta_op(q, var).is_zero()
    return theta_voiculescu(ps).is_zero()


def antiderivative_cyclic(q: CyclicInput, var: int | None = None) -> NCPoly:
    """
    Returns p with zero constant term and delta[p] = q (delta_j[p] = q_j for a tuple).

    Built as p = sum_d h_d / d with h = X q (h = sum_j X_j q_j for a tuple) and
    verified before returning.
    """
    ps = _as_tuple(q)
    if ps is None:
        assert isinstance(q, NCPoly)
        x = resolve_var(q, var)
        h = _letter_times(q, x)
        p = _divide_by_degree(h, x)
        if cyclic_derivative(p, x) != q:
            raise NotExact(f"{q} is not a cyclic derivative.")
        return p

    theta_voiculescu(ps)  # validates the tuple
    first = ps[0]
    h = NCPoly.zero(first.algebra, first.n_vars)
    for j, qj in enumerate(ps, start=1):
        h = h + NCPoly.var(first.algebra, first.n_vars, j) * qj
    p = _divide_by_degree(h, None)
    for j, qj in enumerate(ps, start=1):
        if cyclic_derivative(p, j) != qj:
            raise NotExact(f"The tuple is not a cyclic gradient (component {j} differs).")
    return p


def _letter_times(q: NCPoly, var: int) -> NCPoly:
    return NCPoly.var(q.algebra, q.n_vars, var) * q


def is_gradient_exact(xi: TensorPoly, var: int = 1) -> bool:
    """(d (x) id)[xi] == (id (x) d)[xi]"""
    return diff_tensor_left(xi, var) == diff_tensor_right(xi, var)


def antiderivative_grad(xi: TensorPoly, var: int = 1) -> NCPoly:
    """
    Returns g with zero constant term and d[g] = xi, built as sum_d (d*[xi])_d / d and
    verified before returning.
    """
    g = _divide_by_degree(divergence(xi, var), var)
    if free_diff(g, var) != xi:
        raise NotExact(f"{xi} is not a free difference quotient.")
    return g


class ExactnessConditions(NamedTuple):
    antiderivative_exists: bool
    symmetric: bool
    grading_identity: bool

    @property
    def consistent(self) -> bool:
        return self.antiderivative_exists == self.symmetric == self.grading_identity


def cyclic_exactness_conditions(p: NCPoly, var: int | None = None) -> ExactnessConditions:
    """
    Three independent tests of p in ran(delta):
    the solver succeeds; d[p] is flip-symmetric; delta[D*[p]] == L[p].
    """
    x = resolve_var(p, var)
    try:
        antiderivative_cyclic(p, x)
        exists = True
    except NotExact:
        exists = False
    dp = free_diff(p, x)
    symmetric = dp == flip(dp)
    grading = cyclic_derivative(cyclic_divergence(p, x), x) == grading_op(p, x)
    result = ExactnessConditions(exists, symmetric, grading)
    logger.debug(f"Cyclic exactness conditions: {result}")
    return result


def gradient_exactness_conditions(xi: TensorPoly, var: int = 1) -> ExactnessConditions:
    """
    Three independent tests of xi in ran(d):
    the solver succeeds; (d (x) id)[xi] == (id (x) d)[xi]; d[d*[xi]] == N_2[xi].
    """
    try:
        antiderivative_grad(xi, var)
        exists = True
    except NotExact:
        exists = False
    symmetric = is_gradient_exact(xi, var)
    grading = free_diff(divergence(xi, var), var) == number_op2(xi, var)
    result = ExactnessConditions(exists, symmetric, grading)
    logger.debug(f"Gradient exactness conditions: {result}")
    return result
