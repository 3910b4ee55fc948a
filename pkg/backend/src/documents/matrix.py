from __future__ import annotations

from typing import Any, Literal, TypedDict

import numpy as np

from matricial import MatrixPoint

from .poly import SCHEMA_VERSION, check_header, require_field
from .scalar import DocumentError


class ComplexArrayJson(TypedDict):
    re: list[list[float]]
    im: list[list[float]]


class MatrixDocument(TypedDict):
    schema_version: int
    type: Literal["matrix"]
    level: int
    k: int
    mats: list[ComplexArrayJson]
    """Row-major real and imaginary parts."""


def array_to_json(a: np.ndarray) -> ComplexArrayJson:
    a = np.asarray(a, dtype=np.complex128)
    return {"re": a.real.tolist(), "im": a.imag.tolist()}


def array_from_json(j: Any) -> np.ndarray:
    try:
        re_part = np.array(require_field(j, "re", list), dtype=np.float64)
        im_part = np.array(require_field(j, "im", list), dtype=np.float64)
    except (TypeError, ValueError) as e:
        raise DocumentError(f"Matrix entries must be numbers: {e}") from e
    if re_part.ndim != 2 or re_part.shape != im_part.shape:
        raise DocumentError(
            f"Real and imaginary parts must be matrices of one shape, got {re_part.shape} and {im_part.shape}."
        )
    return re_part + 1j * im_part


def point_to_json(pt: MatrixPoint) -> MatrixDocument:
    return {
        "schema_version": SCHEMA_VERSION,
        "type": "matrix",
        "level": pt.level,
        "k": pt.k,
        "mats": [array_to_json(m) for m in pt.mats],
    }


def _level_and_k(doc: Any) -> tuple[int, int]:
    check_header(doc, ("matrix",))
    level = require_field(doc, "level", int)
    k = require_field(doc, "k", int)
    if level < 1 or k < 1:
        raise DocumentError(f"level and k must be positive, got level={level}, k={k}.")
    return level, k


def point_from_json(doc: Any) -> MatrixPoint:
    level, k = _level_and_k(doc)
    mats = tuple(array_from_json(m) for m in require_field(doc, "mats", list))
    if not mats:
        raise DocumentError("A matrix point needs at least one matrix.")
    try:
        return MatrixPoint(level, k, mats)
    except ValueError as e:
        raise DocumentError(str(e)) from e


def direction_from_json(doc: Any) -> np.ndarray:
    """A single, possibly rectangular, block matrix. `level` counts its block rows."""
    level, k = _level_and_k(doc)
    mats = require_field(doc, "mats", list)
    if len(mats) != 1:
        raise DocumentError(f"A direction holds exactly one matrix, got {len(mats)}.")
    z = array_from_json(mats[0])
    rows, cols = z.shape
    if rows != level * k or cols % k != 0:
        raise DocumentError(
            f"A direction with level={level}, k={k} needs {level * k} rows and a multiple of {k} columns, got {z.shape}."
        )
    return z


def direction_to_json(z: np.ndarray, k: int) -> MatrixDocument:
    return {
        "schema_version": SCHEMA_VERSION,
        "type": "matrix",
        "level": z.shape[0] // k,
        "k": k,
        "mats": [array_to_json(z)],
    }
