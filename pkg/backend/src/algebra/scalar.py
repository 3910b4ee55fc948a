from __future__ import annotations

from fractions import Fraction
from typing import Union

import sympy

Scalar = sympy.Expr
"""
An exact element of the scalar field Q(i, sqrt 2, sqrt 3, ...).

Scalars are sympy expressions kept in expanded form, so two equal scalars are
structurally equal and `x == 0` decides whether a scalar vanishes.
"""

ScalarLike = Union[int, Fraction, sympy.Expr]

ZERO: Scalar = sympy.Integer(0)
ONE: Scalar = sympy.Integer(1)
I: Scalar = sympy.I


def to_scalar(value: ScalarLike) -> Scalar:
    if isinstance(value, (float, complex)):
        raise TypeError(
            f"Floating-point value {value!r} is not an exact scalar. Use an int, a Fraction, or a sympy Rational."
        )
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)
    return sympy.expand(sympy.sympify(value))


def is_zero(value: Scalar) -> bool:
    return sympy.expand(value) == 0


def to_complex(value: Scalar) -> complex:
    """Rounds an exact scalar to double precision. Only used at the numeric boundary."""
    return complex(value)
