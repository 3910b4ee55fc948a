from __future__ import annotations

import re
from typing import TypedDict

import sympy

from algebra import Scalar, to_scalar


class DocumentError(ValueError):
    """A JSON document does not describe a valid value."""


class ScalarJson(TypedDict):
    re: str
    im: str


_TERM = re.compile(r"^(-?\d+)(?:/(\d+))?(?:\*sqrt(\d+))?$")


def _format_real(x: sympy.Expr) -> str:
    """Writes a real element of Q(sqrt 2, sqrt 3, ...) as `p/q*sqrtr` terms joined by ` + `."""
    if x == 0:
        return "0"
    parts: list[str] = []
    for term in sympy.Add.make_args(sympy.expand(x)):
        coeff, rest = term.as_coeff_Mul()
        if not isinstance(coeff, sympy.Rational):
            raise DocumentError(f"Cannot serialize the scalar {x}: {term} has no rational coefficient.")
        if rest == 1:
            parts.append(str(coeff))
            continue
        if not (
            isinstance(rest, sympy.Pow)
            and rest.exp == sympy.Rational(1, 2)
            and isinstance(rest.base, sympy.Integer)
        ):
            raise DocumentError(f"Cannot serialize the scalar {x}: {rest} is not a square root.")
        parts.append(f"{coeff}*sqrt{rest.base}")
    return " + ".join(parts)


def _parse_real(s: str) -> sympy.Expr:
    if not isinstance(s, str):
        raise DocumentError(f"Scalar parts must be strings, got {s!r}.")
    total: sympy.Expr = sympy.Integer(0)
    for raw in s.split("+"):
        m = _TERM.match(raw.strip())
        if m is None:
            raise DocumentError(f"Malformed scalar term {raw.strip()!r} in {s!r}.")
        num, den, root = m.groups()
        if den is not None and int(den) == 0:
            raise DocumentError(f"Zero denominator in {s!r}.")
        value = sympy.Rational(int(num), int(den) if den else 1)
        if root is not None:
            value = value * sympy.sqrt(int(root))
        total = total + value
    return sympy.expand(total)


def scalar_to_json(c: Scalar) -> ScalarJson:
    re_part, im_part = sympy.expand(c).as_real_imag()
    return {"re": _format_real(re_part), "im": _format_real(im_part)}


def scalar_from_json(j: ScalarJson) -> Scalar:
    if not isinstance(j, dict) or "re" not in j or "im" not in j:
        raise DocumentError(f"A scalar needs `re` and `im` strings, got {j!r}.")
    return to_scalar(_parse_real(j["re"]) + sympy.I * _parse_real(j["im"]))
