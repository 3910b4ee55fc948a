from __future__ import annotations

from ncpoly import NCPoly, TensorPoly

from .difference import diff_tensor_left, diff_tensor_right, free_diff
from .divergence import divergence, divergence_left, divergence_right


def number_op(p: NCPoly, i: int) -> NCPoly:
    """N_i = d*_i o d_i. Scales a word by its number of X_i."""
    return divergence(free_diff(p, i), i)


def number_total(p: NCPoly) -> NCPoly:
    result = NCPoly.zero(p.algebra, p.n_vars)
    for i in range(1, p.n_vars + 1):
        result = result + number_op(p, i)
    return result


def grading_op(p: NCPoly, i: int) -> NCPoly:
    """L_i = N_i + id"""
    return number_op(p, i) + p


def number_op_left(u: TensorPoly, i: int) -> TensorPoly:
    """N_i (x) id, computed as (d*_i (x) id) o (d_i (x) id)."""
    return divergence_left(diff_tensor_left(u, i), i)


def number_op_right(u: TensorPoly, i: int) -> TensorPoly:
    """id (x) N_i, computed as (id (x) d*_i) o (id (x) d_i)."""
    return divergence_right(diff_tensor_right(u, i), i)


def number_op2(u: TensorPoly, i: int) -> TensorPoly:
    """N_{i,2} = N_i (x) id + id (x) N_i + id. Eigenvalue n+m+1 on bidegree (n, m)."""
    return number_op_left(u, i) + number_op_right(u, i) + u


def grading_op_left(u: TensorPoly, i: int) -> TensorPoly:
    return number_op_left(u, i) + u


def grading_op_right(u: TensorPoly, i: int) -> TensorPoly:
    return number_op_right(u, i) + u
