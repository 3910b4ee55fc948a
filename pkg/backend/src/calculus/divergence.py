from __future__ import annotations

from ncpoly import NCPoly, TensorPoly, TensorPoly3

from .difference import check_letter, cyclic_derivative, sharp, sharp12, sharp23


def _letter(owner: NCPoly | TensorPoly | TensorPoly3, i: int) -> NCPoly:
    check_letter(owner.n_vars, i)
    return NCPoly.var(owner.algebra, owner.n_vars, i)


def divergence(u: TensorPoly, i: int) -> NCPoly:
    """d*_i[u] = u # X_i"""
    return sharp(u, _letter(u, i))


def cyclic_divergence(p: NCPoly, i: int) -> NCPoly:
    """D*_i[p] = p X_i"""
    return p * _letter(p, i)


def divergence_left(t: TensorPoly3, i: int) -> TensorPoly:
    """d*_i (x) id: A (x) B (x) C -> A X_i B (x) C"""
    return sharp12(t, _letter(t, i))


def divergence_right(t: TensorPoly3, i: int) -> TensorPoly:
    """id (x) d*_i: A (x) B (x) C -> A (x) B X_i C"""
    return sharp23(t, _letter(t, i))


def symmetrization(p: NCPoly, i: int) -> NCPoly:
    """
    C[p] = delta_i[p] X_i. On b_0 X b_1 ... X b_n (single letter) this is the sum of
    the cyclic rotations b_{j+1} X ... X b_n b_0 X ... X b_j X.
    """
    return cyclic_derivative(p, i) * _letter(p, i)
