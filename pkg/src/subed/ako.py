"""Baseline recursion with the single "small node" pruning rule."""

from __future__ import annotations

from collections import Counter

import numpy as np

from .combine import combine_values
from .config import SolverConfig
from .exact import ShiftProfile, capped_edit_distance
from .precision import PrecisionParams, draw_replicas, recover_sums
from .strings import StringOracle
from .tree import PartitionNode


def leaf_profile(X: StringOracle, Y: StringOracle, v: PartitionNode, K: int) -> np.ndarray:
    """min(ED(X_v, Y_{v,s}), K) for every shift, reading X_v and Y_v once."""
    lo, hi = v.interval
    n = len(Y)
    xs = X.read(lo, hi)
    ylo, yhi = max(lo - K, 0), min(hi + K, n)
    ywin = Y.read(ylo, yhi)
    if hi - lo == 1:
        pos = lo + np.arange(-K, K + 1)
        inside = (pos >= 0) & (pos < n)
        out = np.ones(2 * K + 1, dtype=np.float64)
        out[inside] = Y.array[pos[inside]] != xs[0]
        return np.minimum(out, K)
    out = np.empty(2 * K + 1, dtype=np.float64)
    for s in range(-K, K + 1):
        a, b = max(lo + s, 0), min(hi + s, n)
        ys = ywin[a - ylo : b - ylo] if b > a else b""
        out[s + K] = capped_edit_distance(xs, ys, K)
    return out


class AkoSolver:
    def __init__(self, X: StringOracle, Y: StringOracle, config: SolverConfig, rng: np.random.Generator):
        self.X, self.Y, self.cfg, self.rng = X, Y, config, rng
        self.lam = PrecisionParams(config.eps_psl, config.delta_psl, config.c_lambda).lam
        self.active = 0
        self.per_level: Counter[int] = Counter()

    def solve(self, v: PartitionNode, r_v: float) -> np.ndarray:
        K = self.cfg.K
        self.active += 1
        self.per_level[v.depth] += 1
        if len(v) <= 1.0 / r_v:
            return np.zeros(2 * K + 1)
        if v.is_leaf:
            return leaf_profile(self.X, self.Y, v, K)
        kids = v.children
        reps = draw_replicas(self.lam, len(kids), self.rng)
        u = np.minimum(reps.min(axis=1), 1.0)
        est = np.stack([combine_values(self.solve(c, r_v / u[i])) for i, c in enumerate(kids)])
        return np.minimum(recover_sums(est, reps), K)


def solve_node_ako(
    X: StringOracle, Y: StringOracle, v: PartitionNode, r_v: float, config: SolverConfig,
    rng: np.random.Generator,
) -> ShiftProfile:
    return ShiftProfile(config.K, AkoSolver(X, Y, config, rng).solve(v, r_v))
