from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Literal, TypedDict, Union

from algebra import CoeffAlgebra
from ncpoly import MalformedWordError, NCPoly, TensorPoly, TensorPoly3, Word

from .scalar import DocumentError, ScalarJson, scalar_from_json, scalar_to_json

SCHEMA_VERSION = 1

DocumentType = Literal["poly", "tensor", "tensor3", "matrix"]


class AlgebraJson(TypedDict):
    kind: Literal["scalar", "matrix"]
    k: int


class WordJson(TypedDict):
    coeff_basis_indices: list[int]
    letters: list[int]


class TermJson(WordJson):
    scalar: ScalarJson


class TensorTermJson(TypedDict):
    scalar: ScalarJson
    factors: list[WordJson]


class _PolyDocumentBase(TypedDict):
    schema_version: int
    type: Literal["poly"]
    algebra: AlgebraJson
    n_vars: int
    terms: list[TermJson]


class PolyDocument(_PolyDocumentBase, total=False):
    generator_map: dict[str, int]
    """Letter index -> dual basis index for Z-valued use. Keys are strings in JSON."""


class TensorDocument(TypedDict):
    schema_version: int
    type: Literal["tensor", "tensor3"]
    algebra: AlgebraJson
    n_vars: int
    terms: list[TensorTermJson]


AnyDocument = Union[PolyDocument, TensorDocument]


def require_field(doc: Any, key: str, kind: type | tuple[type, ...]) -> Any:
    if not isinstance(doc, dict) or key not in doc:
        raise DocumentError(f"Missing field `{key}`.")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is int:
        raise DocumentError(f"Field `{key}` has the wrong type: {value!r}.")
    return value


def check_header(doc: Any, expected: tuple[DocumentType, ...]) -> DocumentType:
    version = require_field(doc, "schema_version", int)
    if version != SCHEMA_VERSION:
        raise DocumentError(
            f"Unsupported schema_version {version}, expected {SCHEMA_VERSION}."
        )
    kind = require_field(doc, "type", str)
    if kind not in expected:
        raise DocumentError(f"Expected a {' or '.join(expected)} document, got {kind!r}.")
    return kind


def algebra_to_json(algebra: CoeffAlgebra) -> AlgebraJson:
    return {"kind": "scalar" if algebra.is_scalar else "matrix", "k": algebra.k}


def algebra_from_json(j: Any) -> CoeffAlgebra:
    kind = require_field(j, "kind", str)
    k = require_field(j, "k", int)
    if kind == "scalar":
        if k != 1:
            raise DocumentError(f"The scalar algebra has k=1, got k={k}.")
        return CoeffAlgebra.scalar()
    if kind == "matrix":
        if k < 1:
            raise DocumentError(f"Matrix algebras need k >= 1, got k={k}.")
        return CoeffAlgebra.matrix(k)
    raise DocumentError(f"Unknown algebra kind {kind!r}.")


def word_to_json(w: Word) -> WordJson:
    return {"coeff_basis_indices": list(w.basis_indices), "letters": list(w.letters)}


def word_from_json(j: Any) -> Word:
    indices = require_field(j, "coeff_basis_indices", list)
    letters = require_field(j, "letters", list)
    if not all(isinstance(i, int) and not isinstance(i, bool) for i in indices + letters):
        raise DocumentError(f"Word indices must be integers, got {j!r}.")
    try:
        return Word(tuple(indices), tuple(letters))
    except MalformedWordError as e:
        raise DocumentError(str(e)) from e


def poly_to_json(p: NCPoly, generator_map: dict[int, int] | None = None) -> PolyDocument:
    doc: PolyDocument = {
        "schema_version": SCHEMA_VERSION,
        "type": "poly",
        "algebra": algebra_to_json(p.algebra),
        "n_vars": p.n_vars,
        "terms": [
            {
                "scalar": scalar_to_json(c),
                "coeff_basis_indices": list(w.basis_indices),
                "letters": list(w.letters),
            }
            for w, c in p.terms
        ],
    }
    if generator_map:
        doc["generator_map"] = {str(k): v for k, v in sorted(generator_map.items())}
    return doc


def _n_vars(doc: Any) -> int:
    n_vars = require_field(doc, "n_vars", int)
    if n_vars < 1:
        raise DocumentError(f"n_vars must be positive, got {n_vars}.")
    return n_vars


def poly_from_json(doc: Any) -> NCPoly:
    check_header(doc, ("poly",))
    algebra = algebra_from_json(require_field(doc, "algebra", dict))
    n_vars = _n_vars(doc)
    terms = [
        (word_from_json(t), scalar_from_json(require_field(t, "scalar", dict)))
        for t in require_field(doc, "terms", list)
    ]
    try:
        return NCPoly.from_terms(algebra, n_vars, terms)
    except ValueError as e:
        raise DocumentError(str(e)) from e


def generator_map_from_json(doc: Any) -> dict[int, int] | None:
    raw = doc.get("generator_map") if isinstance(doc, dict) else None
    if raw is None:
        return None
    if not isinstance(raw, dict):
        raise DocumentError(f"generator_map must be an object, got {raw!r}.")
    result: dict[int, int] = {}
    for key, value in raw.items():
        try:
            letter = int(key)
        except ValueError as e:
            raise DocumentError(f"generator_map key {key!r} is not a letter index.") from e
        if not isinstance(value, int) or value < 1:
            raise DocumentError(f"generator_map value {value!r} is not a functional index.")
        result[letter] = value
    return result


def tensor_to_json(t: TensorPoly | TensorPoly3) -> TensorDocument:
    return {
        "schema_version": SCHEMA_VERSION,
        "type": "tensor" if isinstance(t, TensorPoly) else "tensor3",
        "algebra": algebra_to_json(t.algebra),
        "n_vars": t.n_vars,
        "terms": [
            {"scalar": scalar_to_json(c), "factors": [word_to_json(w) for w in words]}
            for words, c in t.terms
        ],
    }


def tensor_from_json(doc: Any) -> TensorPoly | TensorPoly3:
    kind = check_header(doc, ("tensor", "tensor3"))
    algebra = algebra_from_json(require_field(doc, "algebra", dict))
    n_vars = _n_vars(doc)
    terms = [
        (
            tuple(word_from_json(f) for f in require_field(t, "factors", list)),
            scalar_from_json(require_field(t, "scalar", dict)),
        )
        for t in require_field(doc, "terms", list)
    ]
    cls = TensorPoly if kind == "tensor" else TensorPoly3
    try:
        return cls.from_terms(algebra, n_vars, terms)
    except ValueError as e:
        raise DocumentError(str(e)) from e


def tensor2_from_json(doc: Any) -> TensorPoly:
    t = tensor_from_json(doc)
    if not isinstance(t, TensorPoly):
        raise DocumentError("Expected a two-fold tensor document.")
    return t


def read_document(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise DocumentError(f"{path} is not valid JSON: {e}") from e


def dump_document(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def write_document(doc: Any, path: str | Path) -> None:
    Path(path).write_text(dump_document(doc), encoding="utf-8")
