from __future__ import annotations

from functools import lru_cache

import sympy


@lru_cache(maxsize=None)
def gell_mann_matrices(k: int) -> tuple[sympy.ImmutableMatrix, ...]:
    """
    Returns the generalized Gell-Mann matrices of size k, normalized to unit
    Hilbert-Schmidt norm.

    The order is fixed: the symmetric family (j < l, lexicographic), then the
    antisymmetric family (j < l, lexicographic), then the diagonal family
    (l = 1, ..., k-1). All of them are traceless and pairwise orthogonal, so
    together with k^-1 I_k they form an orthogonal basis of M_k(C).
    """
    assert k >= 1, "k must be positive"

    def unit(a: int, b: int) -> sympy.Matrix:
        m = sympy.zeros(k, k)
        m[a, b] = 1
        return m

    inv_sqrt2 = 1 / sympy.sqrt(2)
    pairs = [(j, l) for j in range(k) for l in range(j + 1, k)]

    result: list[sympy.ImmutableMatrix] = []
    for j, l in pairs:
        result.append(sympy.ImmutableMatrix((unit(j, l) + unit(l, j)) * inv_sqrt2))
    for j, l in pairs:
        m = (-sympy.I * unit(j, l) + sympy.I * unit(l, j)) * inv_sqrt2
        result.append(sympy.ImmutableMatrix(m.applyfunc(sympy.expand)))
    for l in range(1, k):
        m = sympy.zeros(k, k)
        for a in range(l):
            m[a, a] = 1
        m[l, l] = -l
        m = m / sympy.sqrt(l * (l + 1))
        result.append(sympy.ImmutableMatrix(m.applyfunc(sympy.expand)))
    return tuple(result)


def hilbert_schmidt(a: sympy.MatrixBase, b: sympy.MatrixBase) -> sympy.Expr:
    """<a, b> = Tr(a* b)"""
    return sympy.expand((a.H * b).trace())
