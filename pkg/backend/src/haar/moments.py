from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from sanic.log import logger

from matricial import z_letter
from seed import Seed
from util import thread_count, timed_supplier

from .sampler import sample_haar_unitary

CHUNK_SIZE = 64
"""Samples per work unit. Fixed so that the summation order never depends on threads."""

ZERO_BAND_STDERRS = 4.0
LIMIT_BAND = 0.05

FunctionalWord = tuple[int, ...]
"""A word z(phi_{i(1)}) ... z(phi_{i(n)}) given by its 1-based functional indices."""


@dataclass(frozen=True)
class HaarConfig:
    k: int
    N: int
    samples: int
    seed: int
    normalized: bool = True
    """
    Evaluate the rescaled generators sqrt(k) z(phi_j). With the Hilbert-Schmidt
    normalized dual basis their trace moments tend to k^-#theta; without the rescaling
    the limit carries an extra k^-n for words of length n.
    """

    def __post_init__(self):
        if self.k < 1 or self.N < 1:
            raise ValueError(f"k and N must be positive, got k={self.k}, N={self.N}.")
        if self.samples < 1:
            raise ValueError(f"At least one sample is needed, got {self.samples}.")

    @property
    def letter_scale(self) -> float:
        return math.sqrt(self.k) if self.normalized else 1.0

    def check_word(self, word: FunctionalWord) -> None:
        for j in word:
            if not 1 <= j <= self.k * self.k:
                raise ValueError(f"Functional index {j} out of range 1..{self.k * self.k}.")


@dataclass(frozen=True)
class HaarEstimate:
    mean: complex
    stderr: float
    samples: int
    seed: int


def theta_count(word: FunctionalWord) -> int:
    return sum(1 for j in word if j == 1)


def limit_target(word_i: FunctionalWord, word_j: FunctionalWord, cfg: HaarConfig) -> float:
    """The N -> infinity value of the normalized trace moment of the pair."""
    if word_i != word_j:
        return 0.0
    exponent = theta_count(word_i) + (0 if cfg.normalized else len(word_i))
    return float(cfg.k) ** (-exponent)


class GeneratorCache:
    """The letters z(phi_j)(omega) of one sample, computed on first use."""

    def __init__(self, omega: np.ndarray, cfg: HaarConfig) -> None:
        self.omega = omega
        self.cfg = cfg
        self.__letters: dict[int, np.ndarray] = {}

    def letter(self, j: int) -> np.ndarray:
        m = self.__letters.get(j)
        if m is None:
            m = self.cfg.letter_scale * z_letter(j, self.omega, self.cfg.k)
            self.__letters[j] = m
        return m

    def word(self, word: FunctionalWord) -> np.ndarray:
        result = np.eye(self.cfg.N, dtype=np.complex128)
        for j in word:
            result = result @ self.letter(j)
        return result


Integrand = Callable[[GeneratorCache], np.ndarray]
"""Maps one Haar sample to a vector of complex values."""


def _run_chunk(
    integrand: Integrand, cfg: HaarConfig, start: int, stop: int
) -> tuple[np.ndarray, np.ndarray]:
    seed = Seed(cfg.seed)
    total: np.ndarray | None = None
    total_sq: np.ndarray | None = None
    for index in range(start, stop):
        omega = sample_haar_unitary(cfg.N * cfg.k, seed.stream(index))
        values = np.asarray(integrand(GeneratorCache(omega, cfg)), dtype=np.complex128)
        sq = np.abs(values) ** 2
        total = values if total is None else total + values
        total_sq = sq if total_sq is None else total_sq + sq
    assert total is not None and total_sq is not None
    return total, total_sq


def _pairwise_sum(parts: list[np.ndarray]) -> np.ndarray:
    while len(parts) > 1:
        merged = [a + b for a, b in zip(parts[::2], parts[1::2])]
        if len(parts) % 2 == 1:
            merged.append(parts[-1])
        parts = merged
    return parts[0]


def estimate(integrand: Integrand, cfg: HaarConfig) -> list[HaarEstimate]:
    """
    Monte-Carlo means and standard errors of the integrand over Haar samples. Sample i
    always uses stream i of the seed and chunks are reduced in order, so the result is
    the same for every thread count.
    """
    bounds = [
        (start, min(start + CHUNK_SIZE, cfg.samples))
        for start in range(0, cfg.samples, CHUNK_SIZE)
    ]

    def run():
        with ThreadPoolExecutor(max_workers=thread_count()) as pool:
            return list(pool.map(lambda b: _run_chunk(integrand, cfg, *b), bounds))

    chunks, duration = timed_supplier(run)()
    logger.info(
        f"Haar sampling: {cfg.samples} sample(s) of U({cfg.N * cfg.k}) in {duration:.2f}s"
        f" (seed {cfg.seed})"
    )

    total = _pairwise_sum([s for s, _ in chunks])
    total_sq = _pairwise_sum([sq for _, sq in chunks])

    n = cfg.samples
    mean = total / n
    if n > 1:
        var = np.maximum(total_sq / n - np.abs(mean) ** 2, 0.0) * n / (n - 1)
    else:
        var = np.zeros_like(total_sq)
    stderr = np.sqrt(var / n)
    return [
        HaarEstimate(complex(m), float(e), n, cfg.seed) for m, e in zip(mean, stderr)
    ]


def normalized_trace(a: np.ndarray, b: np.ndarray) -> complex:
    """(1/N) Tr[a b*]"""
    return complex(np.vdot(b, a)) / a.shape[0]


def trace_moment(
    word_i: FunctionalWord, word_j: FunctionalWord, cfg: HaarConfig
) -> HaarEstimate:
    """Estimate of the integral of (1/N) Tr[z_{i(1)} ... z_{i(n)} (z_{j(1)} ... z_{j(m)})*]."""
    cfg.check_word(word_i)
    cfg.check_word(word_j)

    def integrand(g: GeneratorCache) -> np.ndarray:
        return np.array([normalized_trace(g.word(word_i), g.word(word_j))])

    return estimate(integrand, cfg)[0]


def all_words(k: int, max_len: int) -> list[FunctionalWord]:
    words: list[FunctionalWord] = []
    for length in range(max_len + 1):
        words.extend(itertools.product(range(1, k * k + 1), repeat=length))
    return words


@dataclass(frozen=True)
class OrthogonalityEntry:
    word_i: FunctionalWord
    word_j: FunctionalWord
    target: float
    estimate: HaarEstimate
    exact_zero: bool
    """True for pairs of different lengths, whose integral vanishes at every N."""

    @property
    def deviation(self) -> float:
        return abs(self.estimate.mean - self.target)

    @property
    def band(self) -> float:
        spread = ZERO_BAND_STDERRS * self.estimate.stderr
        if self.exact_zero:
            return spread + 1e-12
        return LIMIT_BAND + spread

    @property
    def passed(self) -> bool:
        return self.deviation <= self.band


@dataclass
class OrthogonalityReport:
    config: HaarConfig
    entries: list[OrthogonalityEntry] = field(default_factory=list)

    @property
    def failures(self) -> list[OrthogonalityEntry]:
        return [e for e in self.entries if not e.passed]

    @property
    def passed(self) -> bool:
        return not self.failures


def pair_moments(
    words: Sequence[FunctionalWord], cfg: HaarConfig
) -> dict[tuple[FunctionalWord, FunctionalWord], HaarEstimate]:
    """All pairwise moments (1/N) Tr[w_i w_j*] from one set of samples."""
    for w in words:
        cfg.check_word(w)
    n = len(words)

    def integrand(g: GeneratorCache) -> np.ndarray:
        stacked = np.stack([g.word(w).reshape(-1) for w in words])
        gram = stacked @ stacked.conj().T / cfg.N
        return gram.reshape(-1)

    estimates = estimate(integrand, cfg)
    return {
        (words[a], words[b]): estimates[a * n + b] for a in range(n) for b in range(n)
    }


def verify_orthogonality(max_len: int, cfg: HaarConfig) -> OrthogonalityReport:
    """
    Compares every pair of words of length <= max_len against its large-N limit
    delta_{n,m} delta_{i,j} k^-#theta.
    """
    words = all_words(cfg.k, max_len)
    moments = pair_moments(words, cfg)
    report = OrthogonalityReport(config=cfg)
    for (wi, wj), est in moments.items():
        report.entries.append(
            OrthogonalityEntry(
                word_i=wi,
                word_j=wj,
                target=limit_target(wi, wj, cfg),
                estimate=est,
                exact_zero=len(wi) != len(wj),
            )
        )
    for entry in report.failures:
        logger.warning(
            f"Haar moment {entry.word_i};{entry.word_j} = {entry.estimate.mean:.4f}"
            f" outside {entry.target} +- {entry.band:.4f}"
        )
    return report
