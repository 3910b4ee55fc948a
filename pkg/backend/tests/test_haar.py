from __future__ import annotations

import numpy as np
import pytest
from helpers import x_of

from haar import (
    HaarConfig,
    InjectivityOperator,
    all_words,
    exact_coefficients,
    injectivity_evidence,
    limit_target,
    recover_coefficients,
    sample_haar_unitary,
    trace_moment,
    unitarity_residual,
    verify_orthogonality,
)
from ncpoly import NCPoly
from util import THREADS_ENV


def test_sampler_is_unitary(rng):
    u = sample_haar_unitary(1, rng)
    assert abs(abs(u[0, 0]) - 1) <= 1e-12
    for dim in (2, 5, 16):
        assert unitarity_residual(sample_haar_unitary(dim, rng)) <= 1e-10


def test_sampler_first_moment(rng):
    dim, n = 3, 4000
    values = np.array([abs(sample_haar_unitary(dim, rng)[0, 0]) ** 2 for _ in range(n)])
    stderr = values.std(ddof=1) / np.sqrt(n)
    assert abs(values.mean() - 1 / dim) <= 4 * stderr


def test_config_validation():
    with pytest.raises(ValueError):
        HaarConfig(k=0, N=4, samples=10, seed=1)
    with pytest.raises(ValueError):
        HaarConfig(k=1, N=4, samples=0, seed=1)
    cfg = HaarConfig(k=2, N=4, samples=10, seed=1)
    with pytest.raises(ValueError):
        trace_moment((5,), (1,), cfg)


def test_limit_targets():
    cfg = HaarConfig(k=2, N=4, samples=1, seed=0)
    assert limit_target((1,), (1,), cfg) == 0.5
    assert limit_target((2, 3), (2, 3), cfg) == 1.0
    assert limit_target((1,), (2,), cfg) == 0.0
    raw = HaarConfig(k=2, N=4, samples=1, seed=0, normalized=False)
    assert limit_target((2, 3), (2, 3), raw) == 0.25
    assert len(all_words(2, 2)) == 1 + 4 + 16


def test_scalar_case_is_exact():
    cfg = HaarConfig(k=1, N=8, samples=20, seed=3)
    est = trace_moment((1, 1), (1, 1), cfg)
    assert abs(est.mean - 1) <= 1e-12
    assert est.stderr <= 1e-6
    assert est.samples == 20
    assert est.seed == 3


def test_moments_are_deterministic(monkeypatch):
    cfg = HaarConfig(k=2, N=4, samples=150, seed=11)
    monkeypatch.setenv(THREADS_ENV, "1")
    serial = trace_moment((1, 2), (2,), cfg)
    monkeypatch.setenv(THREADS_ENV, "3")
    parallel = trace_moment((1, 2), (2,), cfg)
    assert serial == parallel


def test_length_mismatch_is_zero():
    cfg = HaarConfig(k=2, N=8, samples=200, seed=5)
    est = trace_moment((2, 3), (4,), cfg)
    assert abs(est.mean) <= 4 * est.stderr + 1e-12


def test_scalar_orthogonality():
    cfg = HaarConfig(k=1, N=8, samples=200, seed=7)
    report = verify_orthogonality(2, cfg)
    assert len(report.entries) == 9
    diagonal = [e for e in report.entries if e.word_i == e.word_j]
    assert all(e.target == 1.0 for e in diagonal)
    assert report.passed, [(e.word_i, e.word_j, e.estimate.mean) for e in report.failures]


def test_orthogonality_at_k2():
    cfg = HaarConfig(k=2, N=64, samples=40, seed=13)
    report = verify_orthogonality(1, cfg)
    moments = {(e.word_i, e.word_j): e for e in report.entries}
    theta = moments[((1,), (1,))]
    assert abs(theta.estimate.mean - 0.5) <= 0.05 + 4 * theta.estimate.stderr
    assert moments[((2,), (3,))].passed
    assert report.passed


def test_recovery_scalar_case(scalars):
    x = x_of(scalars)
    p = NCPoly.scalar(scalars, 1, 2) + x.scale(3)
    cfg = HaarConfig(k=1, N=8, samples=200, seed=17)
    report = recover_coefficients(p, 1, cfg)
    by_word = report.by_word()
    assert abs(by_word[()].recovered - 2) <= 0.1 + 4 * by_word[()].estimate.stderr
    assert abs(by_word[(1,)].recovered - 3) <= 0.1 + 4 * by_word[(1,)].estimate.stderr
    assert report.passed


def test_recovery_with_generator_map(scalars):
    x = x_of(scalars)
    p = x.scale(2)
    assert exact_coefficients(p, {1: 3}) == {(3,): 2 + 0j}
    cfg = HaarConfig(k=2, N=16, samples=60, seed=19)
    report = recover_coefficients(p, 1, cfg, generator_map={1: 3})
    entry = report.by_word()[(3,)]
    assert abs(entry.recovered - 2) <= 0.1 + 4 * entry.estimate.stderr


def test_recovery_rejects_bad_input(scalars, m2):
    x = x_of(scalars)
    cfg = HaarConfig(k=1, N=4, samples=2, seed=0)
    with pytest.raises(ValueError):
        recover_coefficients(x * x, 1, cfg)
    with pytest.raises(ValueError):
        recover_coefficients(x_of(m2), 1, cfg)


@pytest.mark.parametrize("op", list(InjectivityOperator))
def test_injectivity_exact_part(rng, op: InjectivityOperator):
    report = injectivity_evidence(op, trials=3, rng=rng, max_degree=2)
    assert report.passed, report.violations
    assert report.recovery is None


def test_injectivity_statistical_part(rng):
    cfg = HaarConfig(k=1, N=8, samples=150, seed=23)
    report = injectivity_evidence(InjectivityOperator.GRADING, 2, rng, max_degree=2, cfg=cfg)
    assert report.recovery is not None
    assert report.passed, [(e.word, e.recovered, e.exact) for e in report.recovery.failures]
    number2 = injectivity_evidence(InjectivityOperator.NUMBER2, 2, rng, max_degree=2, cfg=cfg)
    assert number2.recovery is None
