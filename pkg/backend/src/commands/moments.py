from __future__ import annotations

from documents import (
    estimate_to_json,
    injectivity_to_json,
    orthogonality_to_json,
    recovery_to_json,
)
from haar import (
    HaarConfig,
    InjectivityOperator,
    injectivity_evidence,
    recover_coefficients,
    trace_moment,
    verify_orthogonality,
)
from operations import InputReader, Param, Result, registry

from .symbolic import INPUT

HAAR_PARAMS = [
    Param("k", "int", "Size of the coefficient matrices.", default=2),
    Param("N", "int", "Matrix level; the unitaries have size N*k.", default=16),
    Param("samples", "int", "Number of Haar samples.", default=1000),
    Param("seed", "int", "Random seed."),
    Param(
        "raw",
        "bool",
        "Use z(phi_j) without the sqrt(k) rescaling; targets gain a factor k^-n.",
        default=False,
    ),
]


def _config(i: InputReader) -> HaarConfig:
    return HaarConfig(
        k=i.get_int("k"),
        N=i.get_int("N"),
        samples=i.get_int("samples"),
        seed=i.get_seed().value,
        normalized=not i.get_bool("raw"),
    )


@registry.register(
    "haar verify",
    description=[
        "Estimates (1/N) Tr[w_i (w_j)*] over Haar unitaries for all words of length <= max-len",
        "and compares with the large-N limit delta_{w_i, w_j} k^-#theta.",
    ],
    params=[*HAAR_PARAMS, Param("max_len", "int", "Longest word.", default=2)],
    randomized=True,
)
def haar_verify(i: InputReader) -> Result:
    return Result(orthogonality_to_json(verify_orthogonality(i.get_int("max_len"), _config(i))))


@registry.register(
    "haar moment",
    description="Estimates one trace moment (1/N) Tr[w_i (w_j)*].",
    params=[
        *HAAR_PARAMS,
        Param("word_i", "words", "Functional indices, e.g. 1,2 (empty for the unit)."),
        Param("word_j", "words", "Functional indices of the second word."),
    ],
    randomized=True,
)
def haar_moment(i: InputReader) -> Result:
    est = trace_moment(i.get_words("word_i"), i.get_words("word_j"), _config(i))
    return Result(estimate_to_json(est))


@registry.register(
    "haar recover",
    description=[
        "Recovers the coefficients of a scalar polynomial in the generators z(phi_j)",
        "from its Haar trace pairings with all words up to max-deg.",
    ],
    params=[*HAAR_PARAMS, INPUT, Param("max_deg", "int", "Longest paired word.", default=None)],
    randomized=True,
)
def haar_recover(i: InputReader) -> Result:
    p = i.get_poly("input")
    max_deg = i.get_optional_int("max_deg")
    if max_deg is None:
        max_deg = p.degree or 0
    report = recover_coefficients(p, max_deg, _config(i), i.get_generator_map("input"))
    return Result(recovery_to_json(report))


@registry.register(
    "haar injectivity",
    description=[
        "Checks that L or N2 acts with eigenvalues >= 1 on random inputs.",
        "With --statistical (grading only), also recovers p from the Haar pairings of L[p].",
    ],
    params=[
        *HAAR_PARAMS,
        Param("op", "str", "Operator.", default="grading", choices=("grading", "number2")),
        Param("trials", "int", "Number of random inputs.", default=50),
        Param("max_degree", "int", "Maximal degree of the random inputs.", default=3),
        Param("statistical", "bool", "Run the Monte-Carlo recovery as well.", default=False),
    ],
    randomized=True,
)
def haar_injectivity(i: InputReader) -> Result:
    cfg = _config(i) if i.get_bool("statistical") else None
    report = injectivity_evidence(
        InjectivityOperator(i.get_str("op")),
        i.get_int("trials"),
        i.get_seed().rng(),
        max_degree=i.get_int("max_degree"),
        cfg=cfg,
        n_letters=i.get_int("k") ** 2,
    )
    return Result(injectivity_to_json(report))
