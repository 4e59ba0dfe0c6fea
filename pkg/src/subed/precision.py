"""Precision sampling: exponential precisions and median-of-max recovery."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

GRID = 2.0**-40
LN2 = math.log(2.0)


@dataclass(frozen=True)
class PrecisionParams:
    eps: float
    delta: float
    c_lambda: float = 8.0

    def __post_init__(self):
        if not self.eps > 0 or not 0 < self.delta < 1:
            raise ValueError("need eps > 0 and 0 < delta < 1")

    @property
    def lam(self) -> int:
        return max(1, math.ceil(self.c_lambda * self.eps**-2 * math.log(1.0 / self.delta)))


@dataclass(frozen=True)
class PrecisionSample:
    u: float
    replicas: np.ndarray


def _round(draws: np.ndarray) -> np.ndarray:
    # word-RAM friendly: round down to the 2^-40 grid, never to zero
    out = draws / GRID
    np.floor(out, out=out)
    out *= GRID
    return np.maximum(out, GRID, out=out)


def draw_replicas(lam: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """``count`` rows of ``lam`` rounded Exp(1) draws."""
    return _round(rng.exponential(1.0, size=(count, lam)))


def sample_precision(params: PrecisionParams, rng: np.random.Generator) -> PrecisionSample:
    reps = draw_replicas(params.lam, 1, rng)[0]
    return PrecisionSample(min(1.0, float(reps.min())), reps)


def recover_sums(estimates: np.ndarray, replicas: np.ndarray) -> np.ndarray:
    """Vectorised recovery for many sums sharing the same precisions.

    estimates: (n, S) array, column t holds the terms of sum t.
    replicas:  (n, lam) array of the terms' replica precisions.
    Returns ln 2 * median_j max_i estimates[i, t] / replicas[i, j] per column.
    """
    est = np.asarray(estimates, dtype=np.float64)
    if est.ndim == 1:
        est = est[:, None]
    if est.shape[0] == 0:
        return np.zeros(est.shape[1])
    reps = np.asarray(replicas, dtype=np.float64)
    if est.shape[1] == 1:
        m = (est / reps).max(axis=0)[None, :]
    else:
        # (S, lam): max over terms
        m = np.max(est.T[:, :, None] / reps[None, :, :], axis=1)
    return LN2 * np.median(m, axis=1)


def recover_sum(estimates, samples: list[PrecisionSample]) -> float:
    est = np.asarray(estimates, dtype=np.float64)
    if len(est) != len(samples):
        raise ValueError("one sample per estimate")
    if len(est) == 0:
        return 0.0
    reps = np.stack([s.replicas for s in samples])
    return float(recover_sums(est, reps)[0])


def conditional_inverse_mean_check(
    params: PrecisionParams, N: float, trials: int, rng: np.random.Generator, chunk: int = 20000
) -> float:
    """Empirical E[1/u | u > 1/(lam N)]."""
    lam = params.lam
    thresh = 1.0 / (lam * N)
    total, hits = 0.0, 0
    left = trials
    while left > 0:
        c = min(chunk, left)
        # min of lam rate-1 exponentials is Exp(lam); rounding as above
        u = np.minimum(_round(rng.exponential(1.0 / lam, size=c)), 1.0)
        keep = u[u > thresh]
        total += float(np.sum(1.0 / keep))
        hits += len(keep)
        left -= c
    return total / hits if hits else float("nan")
