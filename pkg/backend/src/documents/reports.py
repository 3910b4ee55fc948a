from __future__ import annotations

from typing import Any, Sequence

from haar import (
    HaarEstimate,
    InjectivityReport,
    OrthogonalityReport,
    RecoveryReport,
)
from matricial import AxiomReport
from poincare import AuditReport, ExactnessConditions, KernelDecomposition

from .poly import poly_to_json

ReportJson = dict[str, Any]


def _complex(z: complex) -> dict[str, float]:
    return {"re": float(z.real), "im": float(z.imag)}


def verdict_to_json(value: bool, what: str) -> ReportJson:
    return {"type": "verdict", "check": what, "value": value}


def conditions_to_json(c: ExactnessConditions) -> ReportJson:
    return {
        "type": "exactness_conditions",
        "antiderivative_exists": c.antiderivative_exists,
        "symmetric": c.symmetric,
        "grading_identity": c.grading_identity,
        "consistent": c.consistent,
    }


def kernel_decomposition_to_json(d: KernelDecomposition) -> ReportJson:
    return {
        "type": "kernel_decomposition",
        "constant": poly_to_json(d.constant),
        "pairs": [{"u": poly_to_json(u), "v": poly_to_json(v)} for u, v in d.pairs],
    }


def audit_to_json(r: AuditReport) -> ReportJson:
    return {
        "type": "audit",
        "passed": r.passed,
        "samples": r.samples,
        "exact_inputs": r.exact_inputs,
        "violations": list(r.violations),
    }


def axioms_to_json(r: AxiomReport) -> ReportJson:
    return {
        "type": "axioms",
        "passed": r.passed,
        "tol": r.tol,
        "max_direct_sum_residual": r.max_direct_sum_residual,
        "max_scaled_similarity_residual": r.max_scaled_similarity_residual,
        "rows": [
            {
                "direct_sum_residual": t.direct_sum_residual,
                "similarity_residual": t.similarity_residual,
                "condition": t.condition,
            }
            for t in r.trials
        ],
    }


def estimate_to_json(e: HaarEstimate) -> ReportJson:
    return {
        "type": "haar_estimate",
        "mean": _complex(e.mean),
        "stderr": e.stderr,
        "samples": e.samples,
        "seed": e.seed,
    }


def orthogonality_to_json(r: OrthogonalityReport) -> ReportJson:
    return {
        "type": "orthogonality",
        "passed": r.passed,
        "k": r.config.k,
        "N": r.config.N,
        "samples": r.config.samples,
        "seed": r.config.seed,
        "rows": [
            {
                "word_i": list(e.word_i),
                "word_j": list(e.word_j),
                "target": e.target,
                "mean": _complex(e.estimate.mean),
                "stderr": e.estimate.stderr,
                "band": e.band,
                "passed": e.passed,
            }
            for e in r.entries
        ],
    }


def recovery_to_json(r: RecoveryReport) -> ReportJson:
    return {
        "type": "recovery",
        "passed": r.passed,
        "k": r.config.k,
        "N": r.config.N,
        "samples": r.config.samples,
        "seed": r.config.seed,
        "rows": [
            {
                "word": list(e.word),
                "scaled": _complex(e.estimate.mean),
                "stderr": e.estimate.stderr,
                "recovered": _complex(e.recovered),
                "exact": _complex(e.exact),
                "passed": e.passed,
            }
            for e in r.entries
        ],
    }


def injectivity_to_json(r: InjectivityReport) -> ReportJson:
    return {
        "type": "injectivity",
        "operator": r.operator.value,
        "passed": r.passed,
        "trials": r.trials,
        "violations": list(r.violations),
        "recovery": recovery_to_json(r.recovery) if r.recovery is not None else None,
    }


def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, list):
        return "(" + ",".join(_cell(v) for v in value) + ")"
    if isinstance(value, dict) and set(value) == {"re", "im"}:
        re_part, im_part = value["re"], value["im"]
        if isinstance(re_part, float):
            return f"{re_part:.6g}{im_part:+.6g}i"
        return f"{re_part} + ({im_part})i"
    return str(value)


def _table(rows: Sequence[dict[str, Any]]) -> list[str]:
    if not rows:
        return ["(no rows)"]
    headers = list(rows[0].keys())
    cells = [[_cell(row[h]) for h in headers] for row in rows]
    widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in cells)
    return lines


def render_table(report: ReportJson) -> str:
    """Plain-text rendering of a report: scalar fields first, then the `rows` table."""
    lines: list[str] = []
    for key, value in report.items():
        if key in ("rows", "violations") or isinstance(value, dict) and "schema_version" in value:
            continue
        if isinstance(value, dict) and "rows" in value:
            lines.append(f"{key}:")
            lines.extend("  " + line for line in render_table(value).splitlines())
            continue
        lines.append(f"{key}: {_cell(value)}")
    for message in report.get("violations", []):
        lines.append(f"violation: {message}")
    if "rows" in report:
        lines.append("")
        lines.extend(_table(report["rows"]))
    return "\n".join(lines) + "\n"
