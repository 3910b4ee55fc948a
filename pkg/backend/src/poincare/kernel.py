from __future__ import annotations

from typing import NamedTuple

import sympy
from sanic.log import logger

from calculus import (
    cyclic_derivative,
    join_blocks,
    resolve_var,
    split_blocks,
    symmetrization,
)
from ncpoly import NCPoly, Word, commutator, concat, homogeneous_components


class NotInKernel(Exception):
    pass


class KernelDecomposition(NamedTuple):
    constant: NCPoly
    """The component of degree 0."""
    pairs: list[tuple[NCPoly, NCPoly]]
    """Pairs (u, v) whose commutators [u, v] sum to the rest."""

    def recombine(self) -> NCPoly:
        result = self.constant
        for u, v in self.pairs:
            result = result + commutator(u, v)
        return result


def kernel_membership(p: NCPoly, var: int | None = None) -> bool:
    """
    Whether p lies in the kernel of the cyclic derivative(s).

    With a single letter (or a distinguished `var`) the symmetrization C[p] is tested as
    well; both tests must agree.
    """
    if var is None and p.n_vars > 1:
        return all(cyclic_derivative(p, i).is_zero() for i in range(1, p.n_vars + 1))

    x = resolve_var(p, var)
    by_delta = cyclic_derivative(p, x).is_zero()
    by_symmetrization = symmetrization(p, x).is_zero()
    assert by_delta == by_symmetrization, "ker(delta) and ker(C) must coincide"
    return by_delta


def _word_poly(p: NCPoly, w: Word) -> NCPoly:
    return NCPoly.word(p.algebra, p.n_vars, w)


def _chain(p: NCPoly, blocks: list[Word], x: int, trailing_letter: bool) -> NCPoly:
    """c_0 X c_1 ... X c_j, followed by X when `trailing_letter`."""
    result = _word_poly(p, join_blocks(blocks, x))
    if trailing_letter:
        result = result * NCPoly.var(p.algebra, p.n_vars, x)
    return result


def _word_pairs(p: NCPoly, w: Word, x: int) -> list[tuple[NCPoly, NCPoly]]:
    """
    The commutator pairs for one word c_0 X c_1 ... X c_m of a homogeneous element of
    ker(C), before the 1/m scaling:
      [c_0 X, c_1 X ... X c_m]
      [c_j X, c_{j+1} X ... X c_m c_0 X ... c_{j-1} X]   for j = 1 .. m-1
      [c_0 X ... c_j X, c_{j+1} X ... X c_m]             for j = 0 .. m-2
    """
    c = split_blocks(w, x)
    m = len(c) - 1
    pairs = [(_chain(p, c[:1], x, True), _chain(p, c[1:], x, False))]

    wrapped = concat(p.algebra, c[m], c[0])
    if wrapped is not None:
        for j in range(1, m):
            rest = [*c[j + 1 : m], wrapped, *c[1:j]]
            pairs.append((_chain(p, [c[j]], x, True), _chain(p, rest, x, True)))

    for j in range(m - 1):
        pairs.append((_chain(p, c[: j + 1], x, True), _chain(p, c[j + 1 :], x, False)))
    return pairs


def kernel_decompose(p: NCPoly, var: int | None = None) -> KernelDecomposition:
    """
    Writes p in ker(delta) as b + sum_j [u_j, v_j] with b of degree 0. The
    recombination is verified before returning.
    """
    x = resolve_var(p, var)
    if not kernel_membership(p, x):
        raise NotInKernel(f"{p} is not in the kernel of the cyclic derivative.")

    constant = NCPoly.zero(p.algebra, p.n_vars)
    pairs: list[tuple[NCPoly, NCPoly]] = []
    for m, component in homogeneous_components(p, x).items():
        if m == 0:
            constant = component
            continue
        scale = sympy.Rational(1, m)
        for w, alpha in component.terms:
            for u, v in _word_pairs(p, w, x):
                pairs.append((u.scale(alpha * scale), v))
        logger.debug(f"Kernel decomposition: degree {m}, {len(component.terms)} word(s)")

    result = KernelDecomposition(constant, pairs)
    if result.recombine() != p:
        raise NotInKernel("The commutator decomposition does not recombine to the input.")
    return result
