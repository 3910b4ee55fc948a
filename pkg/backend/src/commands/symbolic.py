from __future__ import annotations

from typing import Callable

from calculus import (
    cyclic_derivative,
    cyclic_divergence,
    divergence,
    flip,
    free_diff,
    grading_op,
    mul_map,
    number_op,
    number_op2,
    number_total,
    rho,
    symmetrization,
    theta_op,
    theta_voiculescu,
    xi_op,
)
from documents import poly_to_json, tensor_to_json
from ncpoly import NCPoly, TensorPoly
from operations import InputReader, Param, Result, registry

INPUT = Param("input", "poly", "Polynomial document.", flags=("-i", "--input"))
TENSOR_INPUT = Param("input", "tensor", "Tensor document.", flags=("-i", "--input"))
VAR = Param("var", "int", "Letter index (1-based).", default=1)
OPTIONAL_VAR = Param(
    "var",
    "int",
    "Distinguished letter. Required when the polynomial has several letters.",
    default=None,
)


def poly_result(p: NCPoly) -> Result:
    return Result(poly_to_json(p), f"{p}\n")


def tensor_result(u: TensorPoly) -> Result:
    return Result(tensor_to_json(u), f"{u}\n")


def _poly_op(
    name: str, description: str, fn: Callable[[NCPoly, int], NCPoly]
) -> None:
    @registry.register(name, description=description, params=[INPUT, VAR])
    def run(i: InputReader) -> Result:
        return poly_result(fn(i.get_poly("input"), i.get_int("var")))


def _rotation_op(
    name: str, description: str, fn: Callable[[NCPoly, int | None], NCPoly]
) -> None:
    @registry.register(name, description=description, params=[INPUT, OPTIONAL_VAR])
    def run(i: InputReader) -> Result:
        return poly_result(fn(i.get_poly("input"), i.get_optional_int("var")))


@registry.register(
    "diff",
    description="Free difference quotient d_i: splits every word at each occurrence of X_i.",
    params=[INPUT, VAR],
)
def diff(i: InputReader) -> Result:
    return tensor_result(free_diff(i.get_poly("input"), i.get_int("var")))


@registry.register(
    "flip",
    description="Swaps the two tensor factors.",
    params=[TENSOR_INPUT],
)
def flip_command(i: InputReader) -> Result:
    return tensor_result(flip(i.get_tensor("input")))


@registry.register(
    "mul",
    description="Multiplies the tensor factors: a (x) c -> ac.",
    params=[TENSOR_INPUT],
)
def mul_command(i: InputReader) -> Result:
    return poly_result(mul_map(i.get_tensor("input")))


@registry.register(
    "divergence",
    description="Divergence d*_i: a (x) c -> a X_i c.",
    params=[TENSOR_INPUT, VAR],
)
def divergence_command(i: InputReader) -> Result:
    return poly_result(divergence(i.get_tensor("input"), i.get_int("var")))


@registry.register(
    "number2",
    description="Two-sided number operator N (x) id + id (x) N + id on a tensor.",
    params=[TENSOR_INPUT, VAR],
)
def number2_command(i: InputReader) -> Result:
    return tensor_result(number_op2(i.get_tensor("input"), i.get_int("var")))


@registry.register(
    "number",
    description=[
        "Number operator N_i = d*_i o d_i, which scales a word by its number of X_i.",
        "With --total, the sum over all letters.",
    ],
    params=[
        INPUT,
        VAR,
        Param("total", "bool", "Sum over all letters.", default=False),
    ],
)
def number_command(i: InputReader) -> Result:
    p = i.get_poly("input")
    if i.get_bool("total"):
        return poly_result(number_total(p))
    return poly_result(number_op(p, i.get_int("var")))


@registry.register(
    "theta-map",
    description="(p_1, ..., p_n) -> sum_j [X_j, p_j] for scalar-coefficient polynomials.",
    params=[
        Param("input", "polys", "One polynomial document per letter.", flags=("-i", "--input")),
    ],
)
def theta_map_command(i: InputReader) -> Result:
    return poly_result(theta_voiculescu(i.get_polys("input")))


_poly_op("cyclic", "Cyclic derivative delta_i = mu o flip o d_i.", cyclic_derivative)
_poly_op("cyclic-div", "Cyclic divergence D*_i: p -> p X_i.", cyclic_divergence)
_poly_op("grading", "Grading operator L_i = N_i + id.", grading_op)
_poly_op("symmetrize", "Symmetrization C: p -> delta_i[p] X_i.", symmetrization)
_rotation_op("rho", "Rotation b0 X b1 ... X bn -> b1 X ... X bn X b0.", rho)
_rotation_op("theta-op", "Theta = id - rho, whose kernel is the range of delta.", theta_op)
_rotation_op("xi-op", "xi: b0 X b1 ... X bn -> X b1 ... X bn b0.", xi_op)
