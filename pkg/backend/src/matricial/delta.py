from __future__ import annotations

import numpy as np

from calculus import diff_tensor_left, free_diff
from ncpoly import NCPoly

from .evaluate import Evaluator, GeneratorMap, check_mode, evaluate, z_letter
from .point import EvalMode, EvaluationError, MatrixPoint


def relative_residual(a: np.ndarray, b: np.ndarray) -> float:
    """||a - b|| / max(||a||, ||b||, 1) in the Frobenius norm."""
    scale = max(float(np.linalg.norm(a)), float(np.linalg.norm(b)), 1.0)
    return float(np.linalg.norm(a - b)) / scale


def _check_direction(x: MatrixPoint, y: MatrixPoint, z: np.ndarray) -> None:
    if x.k != y.k or x.n_vars != y.n_vars:
        raise EvaluationError("Both points must live over the same B with the same letters.")
    if z.shape != (x.dim, y.dim):
        raise EvaluationError(
            f"Expected a {x.dim}x{y.dim} direction for levels {x.level} and {y.level}, got {z.shape}."
        )


def _upper_triangular(
    diagonal: list[MatrixPoint],
    off_diagonal: list[np.ndarray],
    mode: EvalMode,
    var: int,
) -> MatrixPoint:
    """
    The block point with `diagonal` on the diagonal and `off_diagonal` right above it.
    In B-valued mode only letter `var` carries the off-diagonal blocks; in Z-valued mode
    the single matrix beta carries them.
    """
    k = diagonal[0].k
    dims = [pt.dim for pt in diagonal]
    offsets = np.concatenate([[0], np.cumsum(dims)])
    total = int(offsets[-1])
    mats = []
    for letter in range(1, diagonal[0].n_vars + 1):
        m = np.zeros((total, total), dtype=np.complex128)
        for i, pt in enumerate(diagonal):
            m[offsets[i] : offsets[i + 1], offsets[i] : offsets[i + 1]] = pt.mats[letter - 1]
        if mode == EvalMode.Z_VALUED or letter == var:
            for i, z in enumerate(off_diagonal):
                m[offsets[i] : offsets[i + 1], offsets[i + 1] : offsets[i + 2]] = z
        mats.append(m)
    return MatrixPoint(sum(pt.level for pt in diagonal), k, tuple(mats))


def delta_numeric(
    p: NCPoly,
    x: MatrixPoint,
    y: MatrixPoint,
    z: np.ndarray,
    mode: EvalMode = EvalMode.B_VALUED,
    var: int = 1,
    generator_map: GeneratorMap | None = None,
) -> np.ndarray:
    """The top-right block of p([[X, Z], [0, Y]])."""
    _check_direction(x, y, z)
    check_mode(p, x, mode)
    block = _upper_triangular([x, y], [z], mode, var)
    value = evaluate(p, block, mode, generator_map)
    n = x.level if mode == EvalMode.Z_VALUED else x.dim
    return value[:n, n:]


def _directions(
    p: NCPoly,
    z: np.ndarray,
    k: int,
    mode: EvalMode,
    var: int,
    generator_map: GeneratorMap | None,
) -> dict[int, np.ndarray]:
    """Letter -> the block that letter contributes in direction z."""
    if mode == EvalMode.B_VALUED:
        return {var: z}
    return {j: z_letter(j, z, k, generator_map) for j in range(1, p.n_vars + 1)}


def symbolic_delta(
    p: NCPoly,
    x: MatrixPoint,
    y: MatrixPoint,
    z: np.ndarray,
    mode: EvalMode = EvalMode.B_VALUED,
    var: int = 1,
    generator_map: GeneratorMap | None = None,
) -> np.ndarray:
    """sum over the terms a (x) c of d_j[p] of a(X) z_j c(Y)."""
    _check_direction(x, y, z)
    ex = Evaluator.at(p, x, mode, generator_map)
    ey = Evaluator.at(p, y, mode, generator_map)
    result = np.zeros((ex.size, ey.size), dtype=np.complex128)
    for j, zj in _directions(p, z, x.k, mode, var, generator_map).items():
        for (a, c), v in free_diff(p, j).terms:
            result = result + complex(v) * (ex.word(a) @ zj @ ey.word(c))
    return result


def symbolic_vs_numeric_delta(
    p: NCPoly,
    x: MatrixPoint,
    y: MatrixPoint,
    z: np.ndarray,
    mode: EvalMode = EvalMode.B_VALUED,
    var: int = 1,
    generator_map: GeneratorMap | None = None,
) -> float:
    return relative_residual(
        symbolic_delta(p, x, y, z, mode, var, generator_map),
        delta_numeric(p, x, y, z, mode, var, generator_map),
    )


def cyclic_numeric(
    p: NCPoly,
    pi: MatrixPoint,
    mode: EvalMode = EvalMode.Z_VALUED,
    var: int = 1,
    generator_map: GeneratorMap | None = None,
) -> np.ndarray:
    """
    sum_{b,c} Tr(Delta p(pi, pi)(e_bc (x) I_k)) e_cb, which is delta[p] evaluated at pi
    (delta taken in the direction of letter `var`, or of theta in Z-valued mode).
    """
    if mode == EvalMode.B_VALUED and pi.k != 1:
        raise EvaluationError("The trace formula needs scalar values: use Z-valued mode or k=1.")
    n = pi.level
    out = np.zeros((n, n), dtype=np.complex128)
    for b in range(n):
        for c in range(n):
            e = np.zeros((n, n), dtype=np.complex128)
            e[b, c] = 1
            direction = np.kron(e, np.eye(pi.k))
            out[c, b] = np.trace(delta_numeric(p, pi, pi, direction, mode, var, generator_map))
    return out


def delta2_numeric(
    p: NCPoly,
    x: MatrixPoint,
    y: MatrixPoint,
    w: MatrixPoint,
    z1: np.ndarray,
    z2: np.ndarray,
    mode: EvalMode = EvalMode.B_VALUED,
    var: int = 1,
    generator_map: GeneratorMap | None = None,
) -> np.ndarray:
    """The (1, 3) block of p([[X, Z1, 0], [0, Y, Z2], [0, 0, W]])."""
    _check_direction(x, y, z1)
    _check_direction(y, w, z2)
    check_mode(p, x, mode)
    block = _upper_triangular([x, y, w], [z1, z2], mode, var)
    value = evaluate(p, block, mode, generator_map)
    if mode == EvalMode.Z_VALUED:
        n1, n12 = x.level, x.level + y.level
    else:
        n1, n12 = x.dim, x.dim + y.dim
    return value[:n1, n12:]


def symbolic_delta2(
    p: NCPoly,
    x: MatrixPoint,
    y: MatrixPoint,
    w: MatrixPoint,
    z1: np.ndarray,
    z2: np.ndarray,
    mode: EvalMode = EvalMode.B_VALUED,
    var: int = 1,
    generator_map: GeneratorMap | None = None,
) -> np.ndarray:
    """sum over the terms a (x) b (x) c of (d_j (x) id) d_l [p] of a(X) z1_j b(Y) z2_l c(W)."""
    _check_direction(x, y, z1)
    _check_direction(y, w, z2)
    ex = Evaluator.at(p, x, mode, generator_map)
    ey = Evaluator.at(p, y, mode, generator_map)
    ew = Evaluator.at(p, w, mode, generator_map)
    first = _directions(p, z1, x.k, mode, var, generator_map)
    second = _directions(p, z2, x.k, mode, var, generator_map)
    result = np.zeros((ex.size, ew.size), dtype=np.complex128)
    for l, z2l in second.items():
        dl = free_diff(p, l)
        for j, z1j in first.items():
            for (a, b, c), v in diff_tensor_left(dl, j).terms:
                result = result + complex(v) * (
                    ex.word(a) @ z1j @ ey.word(b) @ z2l @ ew.word(c)
                )
    return result
