from __future__ import annotations

from typing import Iterator

from ncpoly import (
    MalformedWordError,
    NCPoly,
    TensorPoly,
    TensorPoly3,
    Word,
    concat,
    concat_all,
)


def check_letter(n_vars: int, i: int) -> None:
    if not 1 <= i <= n_vars:
        raise MalformedWordError(f"Letter {i} out of range for {n_vars} variable(s).")


def splits(w: Word, i: int) -> Iterator[tuple[Word, Word]]:
    """
    b_0 X b_1 ... X b_n  ->  b_0 X ... b_{j-1} (x) b_j X ... b_n for every X_i at
    position j. One term per occurrence, so d[X] = 1 (x) 1.
    """
    for position in w.positions_of(i):
        yield w.split_at(position)


def free_diff(p: NCPoly, i: int) -> TensorPoly:
    check_letter(p.n_vars, i)
    return TensorPoly.from_terms(
        p.algebra,
        p.n_vars,
        ((pair, c) for w, c in p.terms for pair in splits(w, i)),
    )


def flip(u: TensorPoly) -> TensorPoly:
    return u.flip()


def mul_map(u: TensorPoly) -> NCPoly:
    terms = []
    for (a, c), v in u.terms:
        w = concat(u.algebra, a, c)
        if w is not None:
            terms.append((w, v))
    return NCPoly.from_terms(u.algebra, u.n_vars, terms)


def sharp(u: TensorPoly, q: NCPoly) -> NCPoly:
    """(a (x) c) # q = a q c"""
    u.check_compatible(q)
    terms = []
    for (a, c), v in u.terms:
        for b, s in q.terms:
            w = concat_all(u.algebra, (a, b, c))
            if w is not None:
                terms.append((w, v * s))
    return NCPoly.from_terms(u.algebra, u.n_vars, terms)


def sharp12(t: TensorPoly3, q: NCPoly) -> TensorPoly:
    """(A (x) B (x) C) #_{1,2} q = A q B (x) C"""
    t.check_compatible(q)
    terms = []
    for (a, b, c), v in t.terms:
        for x, s in q.terms:
            w = concat_all(t.algebra, (a, x, b))
            if w is not None:
                terms.append(((w, c), v * s))
    return TensorPoly.from_terms(t.algebra, t.n_vars, terms)


def sharp23(t: TensorPoly3, q: NCPoly) -> TensorPoly:
    """(A (x) B (x) C) #_{2,3} q = A (x) B q C"""
    t.check_compatible(q)
    terms = []
    for (a, b, c), v in t.terms:
        for x, s in q.terms:
            w = concat_all(t.algebra, (b, x, c))
            if w is not None:
                terms.append(((a, w), v * s))
    return TensorPoly.from_terms(t.algebra, t.n_vars, terms)


def cyclic_derivative(p: NCPoly, i: int) -> NCPoly:
    """mu o sigma o d_i"""
    return mul_map(flip(free_diff(p, i)))


def diff_tensor_left(u: TensorPoly, i: int) -> TensorPoly3:
    """d_i (x) id"""
    check_letter(u.n_vars, i)
    return TensorPoly3.from_terms(
        u.algebra,
        u.n_vars,
        (((l, r, c), v) for (a, c), v in u.terms for l, r in splits(a, i)),
    )


def diff_tensor_right(u: TensorPoly, i: int) -> TensorPoly3:
    """id (x) d_i"""
    check_letter(u.n_vars, i)
    return TensorPoly3.from_terms(
        u.algebra,
        u.n_vars,
        (((a, l, r), v) for (a, c), v in u.terms for l, r in splits(c, i)),
    )
