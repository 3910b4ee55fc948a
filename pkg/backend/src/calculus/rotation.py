from __future__ import annotations

from typing import Sequence

from algebra import ONE, CoeffAlgebra, Scalar
from ncpoly import NCPoly, Word, commutator, concat

from .difference import check_letter


class UnsupportedInputError(ValueError):
    pass


def resolve_var(p: NCPoly, var: int | None) -> int:
    """
    Rotation operators act on B<X> with a single letter. On several letters they need
    a distinguished letter; the other letters are then part of the coefficients.
    """
    if var is None:
        if p.n_vars != 1:
            raise UnsupportedInputError(
                f"Rotation operators need a single letter or an explicit var, got {p.n_vars} letters."
            )
        return 1
    check_letter(p.n_vars, var)
    return var


def split_blocks(w: Word, var: int) -> list[Word]:
    """c_0 X c_1 ... X c_n -> [c_0, ..., c_n], splitting at each occurrence of X_var."""
    blocks: list[Word] = []
    rest = w
    positions = w.positions_of(var)
    offset = 0
    for position in positions:
        left, rest = rest.split_at(position - offset)
        blocks.append(left)
        offset = position + 1
    blocks.append(rest)
    return blocks


def join_blocks(blocks: Sequence[Word], var: int) -> Word:
    """Inverse of `split_blocks`: c_0 X c_1 ... X c_n."""
    basis: tuple[int, ...] = ()
    letters: tuple[int, ...] = ()
    for j, block in enumerate(blocks):
        if j > 0:
            letters += (var,)
        basis += block.basis_indices
        letters += block.letters
    return Word(basis, letters)


def rho(p: NCPoly, var: int | None = None) -> NCPoly:
    """c_0 X c_1 ... X c_n -> c_1 X ... X c_n X c_0; identity on degree 0."""
    x = resolve_var(p, var)

    def image(w: Word) -> list[tuple[Word, Scalar]]:
        blocks = split_blocks(w, x)
        if len(blocks) == 1:
            return [(w, ONE)]
        return [(join_blocks([*blocks[1:], blocks[0]], x), ONE)]

    return p.map_words(image)


def theta_op(p: NCPoly, var: int | None = None) -> NCPoly:
    """Theta = id - rho"""
    return p - rho(p, var)


def _leading_letter(algebra: CoeffAlgebra, tail: Word, x: int) -> list[Word]:
    # 1 X tail = sum_a e_aa X tail
    return [Word((a, *tail.basis_indices), (x, *tail.letters)) for a in algebra.unit_indices]


def xi_op(p: NCPoly, var: int | None = None) -> NCPoly:
    """c_0 X c_1 ... X c_n -> X c_1 ... X (c_n c_0); identity on degree 0."""
    x = resolve_var(p, var)

    def image(w: Word) -> list[tuple[Word, Scalar]]:
        blocks = split_blocks(w, x)
        if len(blocks) == 1:
            return [(w, ONE)]
        fused = concat(p.algebra, blocks[-1], blocks[0])
        if fused is None:
            return []
        tail = join_blocks([*blocks[1:-1], fused], x)
        return [(lead, ONE) for lead in _leading_letter(p.algebra, tail, x)]

    return p.map_words(image)


def theta_bracket(p: NCPoly, var: int | None = None) -> NCPoly:
    """The single-letter commutator map p -> [X, p]."""
    x = resolve_var(p, var)
    return commutator(NCPoly.var(p.algebra, p.n_vars, x), p)


def xi_theta(p: NCPoly, var: int | None = None) -> NCPoly:
    """xi o [X, .]; equals X * Theta[p], so it has the kernel of Theta."""
    return xi_op(theta_bracket(p, var), var)


def theta_voiculescu(ps: Sequence[NCPoly]) -> NCPoly:
    """(p_1, ..., p_n) -> sum_j [X_j, p_j] for scalar coefficients."""
    if not ps:
        raise UnsupportedInputError("The commutator map needs at least one polynomial.")
    first = ps[0]
    for q in ps[1:]:
        first.check_compatible(q)
    if not first.algebra.is_scalar:
        raise UnsupportedInputError(
            "The commutator map is defined for scalar coefficients only."
        )
    if len(ps) != first.n_vars:
        raise UnsupportedInputError(
            f"Expected {first.n_vars} polynomials (one per letter), got {len(ps)}."
        )
    result = NCPoly.zero(first.algebra, first.n_vars)
    for j, q in enumerate(ps, start=1):
        result = result + commutator(NCPoly.var(first.algebra, first.n_vars, j), q)
    return result
