from __future__ import annotations

import numpy as np

from calculus import cyclic_derivative
from documents import ReportJson, array_to_json, axioms_to_json
from matricial import (
    EvalMode,
    check_nc_axioms,
    cyclic_numeric,
    delta2_numeric,
    delta_numeric,
    evaluate,
    relative_residual,
    symbolic_delta,
    symbolic_delta2,
)
from operations import InputReader, Param, Result, registry

from .symbolic import INPUT, VAR

MODE = Param(
    "mode",
    "str",
    "b: B-valued evaluation, z: letters as z(phi_j).",
    default="b",
    choices=("b", "z"),
)
POINT = Param("point", "point", "Matrix point document.")


def _matrix_result(value: np.ndarray, residual: float | None = None) -> Result:
    doc: ReportJson = {"type": "matrix_value", "value": array_to_json(value)}
    text = np.array2string(value, precision=6, suppress_small=True) + "\n"
    if residual is not None:
        doc["symbolic_residual"] = residual
        text += f"symbolic residual: {residual:.3e}\n"
    return Result(doc, text)


@registry.register(
    "eval",
    description="Evaluates a polynomial at a matrix point.",
    params=[INPUT, POINT, MODE],
)
def eval_command(i: InputReader) -> Result:
    return _matrix_result(
        evaluate(
            i.get_poly("input"),
            i.get_point("point"),
            i.get_mode(),
            i.get_generator_map("input"),
        )
    )


@registry.register(
    "delta",
    description=[
        "Top-right block of p([[X, Z], [0, Y]]), compared with the difference quotient",
        "d[p] evaluated at (X; Y) and sandwiched with Z.",
    ],
    params=[
        INPUT,
        Param("x", "point", "Point X."),
        Param("y", "point", "Point Y."),
        Param("z", "direction", "Direction Z."),
        MODE,
        VAR,
    ],
)
def delta_command(i: InputReader) -> Result:
    p = i.get_poly("input")
    x, y, z = i.get_point("x"), i.get_point("y"), i.get_direction("z")
    mode, var, gmap = i.get_mode(), i.get_int("var"), i.get_generator_map("input")
    numeric = delta_numeric(p, x, y, z, mode, var, gmap)
    symbolic = symbolic_delta(p, x, y, z, mode, var, gmap)
    return _matrix_result(numeric, relative_residual(symbolic, numeric))


@registry.register(
    "delta2",
    description=[
        "(1, 3) block of p at the 3x3 block upper-triangular point with diagonal X, Y, W",
        "and directions Z1, Z2, compared with the second-order difference quotient.",
    ],
    params=[
        INPUT,
        Param("x", "point", "Point X."),
        Param("y", "point", "Point Y."),
        Param("w", "point", "Point W."),
        Param("z1", "direction", "Direction Z1 between X and Y."),
        Param("z2", "direction", "Direction Z2 between Y and W."),
        MODE,
        VAR,
    ],
)
def delta2_command(i: InputReader) -> Result:
    p = i.get_poly("input")
    x, y, w = i.get_point("x"), i.get_point("y"), i.get_point("w")
    z1, z2 = i.get_direction("z1"), i.get_direction("z2")
    mode, var, gmap = i.get_mode(), i.get_int("var"), i.get_generator_map("input")
    numeric = delta2_numeric(p, x, y, w, z1, z2, mode, var, gmap)
    symbolic = symbolic_delta2(p, x, y, w, z1, z2, mode, var, gmap)
    return _matrix_result(numeric, relative_residual(symbolic, numeric))


@registry.register(
    "cyclic-numeric",
    description=[
        "sum_{b,c} Tr(Delta p(pi, pi)(e_bc)) e_cb, compared with delta[p] evaluated at pi.",
        "In z mode the difference is taken along theta (letter 1).",
    ],
    params=[
        INPUT,
        POINT,
        Param("mode", "str", "b or z.", default="z", choices=("b", "z")),
        VAR,
    ],
)
def cyclic_numeric_command(i: InputReader) -> Result:
    p, pi, mode = i.get_poly("input"), i.get_point("point"), i.get_mode()
    gmap = i.get_generator_map("input")
    letter = 1 if mode == EvalMode.Z_VALUED else i.get_int("var")
    numeric = cyclic_numeric(p, pi, mode, letter, gmap)
    symbolic = evaluate(cyclic_derivative(p, letter), pi, mode, gmap)
    return _matrix_result(numeric, relative_residual(symbolic, numeric))


@registry.register(
    "axioms",
    description="Samples X, Y, S and checks f(X + Y) = f(X) + f(Y) and f(S X S^-1) = S f(X) S^-1.",
    params=[
        INPUT,
        MODE,
        Param("trials", "int", "Number of sampled triples.", default=20),
        Param("seed", "int", "Random seed."),
        Param("k", "int", "Block size of the points in z mode.", default=None),
        Param("max_level", "int", "Largest sampled level.", default=4),
        Param("tol", "float", "Relative tolerance.", default=1e-9),
    ],
    randomized=True,
)
def axioms_command(i: InputReader) -> Result:
    report = check_nc_axioms(
        i.get_poly("input"),
        i.get_mode(),
        i.get_seed().rng(),
        i.get_int("trials"),
        k=i.get_optional_int("k"),
        max_level=i.get_int("max_level"),
        tol=i.get_float("tol"),
        generator_map=i.get_generator_map("input"),
    )
    return Result(axioms_to_json(report))

