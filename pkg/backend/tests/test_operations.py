from __future__ import annotations

import pytest
import sympy
from helpers import const, unit, x_of

import commands  # noqa: F401
from documents import point_to_json, poly_from_json, poly_to_json, tensor_to_json
from matricial import MatrixPoint
from ncpoly import NCPoly, tensor_of
from operations import (
    InputReader,
    OperationRegistry,
    Param,
    Result,
    UnknownOperationError,
    registry,
    run_operation,
)
from poincare import NotExact, NotInKernel


def test_registry_lists_every_operation():
    names = {op["name"] for op in registry.to_list()}
    for expected in (
        "diff",
        "cyclic",
        "rho",
        "theta-map",
        "antiderivative-cyclic",
        "kernel-decompose",
        "audit",
        "eval",
        "delta2",
        "axioms",
        "haar verify",
        "haar recover",
        "haar injectivity",
    ):
        assert expected in names
    assert [op.path[-1] for op in registry.groups()["haar"]] == [
        "verify",
        "moment",
        "recover",
        "injectivity",
    ]


def test_register_joins_descriptions():
    local = OperationRegistry()

    @local.register("demo", description=["First.", "Second."], params=[])
    def demo(_: InputReader) -> Result:
        return Result({"type": "demo"})

    assert local.get("demo").description == "First.\n\nSecond."
    with pytest.raises(UnknownOperationError):
        local.get("missing")


def test_randomized_operations_take_a_seed():
    local = OperationRegistry()
    with pytest.raises(AssertionError):
        local.register("noisy", description="", params=[], randomized=True)


def test_param_flags():
    assert Param("max_len", "int", "").cli_flags == ("--max-len",)
    assert Param("input", "poly", "", flags=("-i",)).cli_flags == ("-i",)
    assert Param("k", "int", "", default=2).to_dict()["required"] is False


def test_input_reader():
    reader = InputReader({"n": "3", "flag": True, "w": "1, 2", "empty": "", "bad": 1.5})
    assert reader.get_int("n") == 3
    assert reader.get_bool("flag") is True
    assert reader.get_bool("absent") is False
    assert reader.get_words("w") == (1, 2)
    assert reader.get_words("empty") == ()
    assert reader.get_optional_int("absent") is None
    with pytest.raises(ValueError):
        reader.get_int("bad")
    with pytest.raises(ValueError):
        reader.get_seed()
    with pytest.raises(ValueError):
        InputReader({"mode": "q"}).get_mode()


def test_missing_inputs():
    with pytest.raises(ValueError, match="input"):
        run_operation("diff", {})
    with pytest.raises(UnknownOperationError):
        run_operation("integrate", {})


def test_diff_operation(scalars):
    x = x_of(scalars)
    result = run_operation("diff", {"input": poly_to_json(x * x)})
    assert result.document["type"] == "tensor"
    assert "(x)" in result.render()


def test_antiderivative_operation(scalars):
    x = x_of(scalars)
    result = run_operation("antiderivative-cyclic", {"input": [poly_to_json(x.scale(2))]})
    assert poly_from_json(result.document) == x * x
    with pytest.raises(NotExact):
        run_operation("antiderivative-grad", {"input": tensor_to_json(tensor_of(x, NCPoly.one(scalars, 1)))})


def test_kernel_operations(m2):
    b = const(m2, unit(2, 1, 2))
    check = run_operation("kernel-check", {"input": poly_to_json(b)})
    assert check.document["value"] is True
    assert check.render() == "true\n"
    with pytest.raises(NotInKernel):
        run_operation("kernel-decompose", {"input": poly_to_json(x_of(m2))})


def test_exactness_conditions_operation(scalars):
    x = x_of(scalars)
    doc = run_operation("exactness-conditions", {"input": poly_to_json(x.scale(3))}).document
    assert doc["consistent"] and doc["antiderivative_exists"]
    with pytest.raises(ValueError):
        run_operation("exactness-conditions", {})


def test_eval_operation(scalars):
    x = x_of(scalars)
    pt = MatrixPoint.of(2, 1, [[[0, 1], [0, 0]]])
    doc = run_operation("eval", {"input": poly_to_json(x * x), "point": point_to_json(pt)}).document
    assert doc["type"] == "matrix_value"
    assert doc["value"]["re"] == [[0.0, 0.0], [0.0, 0.0]]


def test_cyclic_numeric_operation(scalars):
    x = x_of(scalars)
    pt = MatrixPoint.of(2, 1, [[[1, 2], [3, 4]]])
    doc = run_operation(
        "cyclic-numeric", {"input": poly_to_json(x * x), "point": point_to_json(pt)}
    ).document
    assert doc["value"]["re"] == [[2.0, 4.0], [6.0, 8.0]]
    assert doc["symbolic_residual"] <= 1e-12


def test_randomized_operations_need_a_seed():
    with pytest.raises(ValueError, match="seed"):
        run_operation("audit", {"samples": 1})


def test_audit_operation():
    doc = run_operation("audit", {"samples": 2, "seed": 5, "max_degree": 2}).document
    assert doc["passed"] is True
    assert doc["samples"] == 2


def test_haar_moment_operation():
    doc = run_operation(
        "haar moment",
        {"k": 1, "N": 4, "samples": 8, "seed": 1, "word_i": "1", "word_j": [1]},
    ).document
    assert doc["type"] == "haar_estimate"
    assert doc["mean"]["re"] == pytest.approx(1.0)


def test_haar_injectivity_operation():
    doc = run_operation(
        "haar injectivity", {"k": 1, "seed": 2, "trials": 2, "op": "number2", "max_degree": 2}
    ).document
    assert doc["passed"] is True
    assert doc["recovery"] is None


def test_theta_map_operation(scalars):
    x1, x2 = x_of(scalars, 2, 1), x_of(scalars, 2, 2)
    doc = run_operation("theta-map", {"input": [poly_to_json(x2), poly_to_json(x1)]}).document
    assert poly_from_json(doc).is_zero()
    half = run_operation("number", {"input": poly_to_json((x1 * x2).scale(sympy.Rational(1, 2))), "total": True})
    assert poly_from_json(half.document) == x1 * x2
