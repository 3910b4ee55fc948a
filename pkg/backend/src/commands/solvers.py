from __future__ import annotations

from algebra import CoeffAlgebra
from documents import (
    audit_to_json,
    conditions_to_json,
    kernel_decomposition_to_json,
    verdict_to_json,
)
from operations import InputReader, Param, Result, registry
from poincare import (
    CyclicInput,
    antiderivative_cyclic,
    antiderivative_grad,
    cyclic_exactness_conditions,
    exact_sequence_audit,
    gradient_exactness_conditions,
    is_cyclically_exact,
    is_gradient_exact,
    kernel_decompose,
    kernel_membership,
)

from .symbolic import INPUT, OPTIONAL_VAR, TENSOR_INPUT, VAR, poly_result

CYCLIC_INPUT = Param(
    "input",
    "polys",
    "Polynomial document. Several documents form a tuple (p_1, ..., p_n) over scalar coefficients.",
    flags=("-i", "--input"),
)


def _cyclic_input(i: InputReader) -> CyclicInput:
    ps = i.get_polys("input")
    if len(ps) == 1:
        return ps[0]
    return tuple(ps)


def _verdict(value: bool, what: str) -> Result:
    return Result(verdict_to_json(value, what), f"{str(value).lower()}\n")


@registry.register(
    "check-cyclic-exact",
    description="Decides whether q is a cyclic derivative, one homogeneous component at a time.",
    params=[CYCLIC_INPUT, OPTIONAL_VAR],
)
def check_cyclic_exact(i: InputReader) -> Result:
    return _verdict(
        is_cyclically_exact(_cyclic_input(i), i.get_optional_int("var")),
        "cyclically exact",
    )


@registry.register(
    "antiderivative-cyclic",
    description="Finds p with zero constant term and delta[p] = q. Exits with code 2 if none exists.",
    params=[CYCLIC_INPUT, OPTIONAL_VAR],
)
def antiderivative_cyclic_command(i: InputReader) -> Result:
    return poly_result(antiderivative_cyclic(_cyclic_input(i), i.get_optional_int("var")))


@registry.register(
    "check-grad-exact",
    description="Decides whether a tensor is a free difference quotient: (d (x) id)[xi] == (id (x) d)[xi].",
    params=[TENSOR_INPUT, VAR],
)
def check_grad_exact(i: InputReader) -> Result:
    return _verdict(
        is_gradient_exact(i.get_tensor("input"), i.get_int("var")), "gradient exact"
    )


@registry.register(
    "antiderivative-grad",
    description="Finds g with zero constant term and d[g] = xi. Exits with code 2 if none exists.",
    params=[TENSOR_INPUT, VAR],
)
def antiderivative_grad_command(i: InputReader) -> Result:
    return poly_result(antiderivative_grad(i.get_tensor("input"), i.get_int("var")))


@registry.register(
    "exactness-conditions",
    description=[
        "Computes the three equivalent exactness conditions independently.",
        "For a polynomial: solver success, flip symmetry of d[p], delta[D*[p]] == L[p].",
        "For a tensor (--tensor): solver success, coassociativity symmetry, d[d*[xi]] == N2[xi].",
    ],
    params=[
        Param("input", "poly", "Polynomial document.", flags=("-i", "--input"), default=None),
        Param("tensor", "tensor", "Tensor document.", default=None),
        OPTIONAL_VAR,
    ],
)
def exactness_conditions_command(i: InputReader) -> Result:
    if i.has("tensor"):
        var = i.get_optional_int("var") or 1
        c = gradient_exactness_conditions(i.get_tensor("tensor"), var)
    elif i.has("input"):
        c = cyclic_exactness_conditions(i.get_poly("input"), i.get_optional_int("var"))
    else:
        raise ValueError("exactness-conditions needs --input or --tensor.")
    return Result(conditions_to_json(c))


@registry.register(
    "kernel-check",
    description="Decides p in ker(delta) = B + [B<X>, B<X>].",
    params=[INPUT, OPTIONAL_VAR],
)
def kernel_check(i: InputReader) -> Result:
    return _verdict(
        kernel_membership(i.get_poly("input"), i.get_optional_int("var")),
        "in kernel",
    )


@registry.register(
    "kernel-decompose",
    description="Writes p in ker(delta) as b0 + sum of commutators. Exits with code 2 outside the kernel.",
    params=[INPUT, OPTIONAL_VAR],
)
def kernel_decompose_command(i: InputReader) -> Result:
    d = kernel_decompose(i.get_poly("input"), i.get_optional_int("var"))
    lines = [f"constant: {d.constant}"]
    lines.extend(f"[{u}, {v}]" for u, v in d.pairs)
    return Result(kernel_decomposition_to_json(d), "\n".join(lines) + "\n")


@registry.register(
    "audit",
    description="Randomized audit of the exact sequence B -> B<X> -> B<X> -> B<X> (delta, Theta).",
    params=[
        Param("samples", "int", "Number of random polynomials.", default=20),
        Param("seed", "int", "Random seed."),
        Param("k", "int", "Coefficients in M_k; 1 for scalars.", default=1),
        Param("max_degree", "int", "Maximal degree of the random polynomials.", default=4),
    ],
    randomized=True,
)
def audit_command(i: InputReader) -> Result:
    k = i.get_int("k")
    algebra = CoeffAlgebra.scalar() if k == 1 else CoeffAlgebra.matrix(k)
    report = exact_sequence_audit(
        i.get_seed().rng(), algebra, i.get_int("samples"), i.get_int("max_degree")
    )
    return Result(audit_to_json(report))

