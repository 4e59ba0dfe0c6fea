"""(k, K)-gap decisions and parameter choices."""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field
from typing import Literal

import numpy as np

from .config import Profile, SolverConfig, default_profile, main_config
from .exact import capped_edit_distance
from .solver import BudgetExceeded, MainSolver
from .strings import StringOracle, Text
from .tree import PartitionTree

PAPER_THETA = 0.06
# Desk constants, calibrated once on held-out seeds (see scripts/calibrate.py).
DESK_C_GAP = 2.0
DESK_THETA = 0.44

Verdict = Literal["close", "far"]


@dataclass
class GapReport:
    verdict: Verdict
    delta_root: float
    reads: int
    elapsed_ms: float
    n: int
    k: int
    K: int
    B: int
    seed: int | None
    profile: str
    budget_exceeded: bool = False
    rule_histogram: dict[str, int] = field(default_factory=dict)
    active_nodes: int = 0

    def to_dict(self) -> dict:
        return asdict(self)


def log_base(x: float, B: float) -> float:
    return math.log(x) / math.log(B)


def paper_cap(n: int, k: int, B: int) -> int:
    """Smallest K with K / (1000 * B * D) >= k, D the depth of the K^100-leaf tree."""

    def ok(K: int) -> bool:
        leaves = n if 100 * math.log2(K) >= math.log2(n) else K**100
        D = max(1, math.ceil(log_base(leaves, B) - 1e-12))
        return K >= 1000 * B * D * k

    lo, hi = 1, 2
    while not ok(hi):
        lo, hi = hi, hi * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        lo, hi = (lo, mid) if ok(mid) else (mid, hi)
    return hi


def desk_cap(k: int, B: int, c: float = DESK_C_GAP) -> int:
    return math.ceil(c * k * max(1.0, log_base(k, B)) * B)


def gap_cap(n: int, k: int, B: int, profile: Profile) -> int:
    return paper_cap(n, k, B) if profile == "paper" else desk_cap(k, B)


def default_budget(n: int, k: int, K: int, B: int, profile: Profile) -> float:
    extra = float(K) ** 4 * (B * B if profile == "paper" else 1)
    return 50.0 * n / k + extra


def decide_gap(
    X: Text | StringOracle,
    Y: Text | StringOracle,
    k: int,
    B: int,
    profile: Profile | None = None,
    rng: np.random.Generator | None = None,
    seed: int | None = None,
    budget_reads: float | None = None,
    config: SolverConfig | None = None,
    theta: float | None = None,
) -> GapReport:
    profile = profile or (config.profile if config else default_profile())
    Xo = X if isinstance(X, StringOracle) else StringOracle(X)
    Yo = Y if isinstance(Y, StringOracle) else StringOracle(Y)
    n = len(Xo)
    if len(Yo) != n:
        raise ValueError("X and Y must have equal length")
    if k < 2 or not 2 <= B <= k:
        raise ValueError("need 2 <= B <= k")
    if rng is None:
        rng = np.random.default_rng(seed)
    cfg = config or main_config(n, gap_cap(n, k, B, profile), B, profile)
    K = cfg.K
    theta = theta if theta is not None else (PAPER_THETA if profile == "paper" else DESK_THETA)
    if budget_reads is None:
        budget_reads = default_budget(n, k, K, B, profile)
    solver = MainSolver(Xo, Yo, cfg, rng, budget_reads)
    root = PartitionTree(n, B, cfg.leaf_cap).root
    t0 = time.perf_counter()
    exceeded = False
    try:
        out = solver.solve(root, cfg.root_rate)
        delta = float(out.profile[0])
    except BudgetExceeded:
        exceeded = True
        delta = float(K)
    ms = (time.perf_counter() - t0) * 1000.0
    verdict: Verdict = "far" if exceeded or delta >= theta * K else "close"
    return GapReport(
        verdict=verdict, delta_root=delta, reads=solver.reads, elapsed_ms=ms,
        n=n, k=k, K=K, B=B, seed=seed, profile=profile, budget_exceeded=exceeded,
        rule_histogram=dict(solver.rules), active_nodes=solver.active,
    )


def decide_gap_exact(X: Text | StringOracle, Y: Text | StringOracle, k: int) -> GapReport:
    """Small-k fallback: exact capped distance on the full strings."""
    Xo = X if isinstance(X, StringOracle) else StringOracle(X)
    Yo = Y if isinstance(Y, StringOracle) else StringOracle(Y)
    t0 = time.perf_counter()
    ctr = [0]
    d = capped_edit_distance(Xo.data, Yo.data, k + 1, ctr)
    Xo.charge(ctr[0] // 2)
    Yo.charge(ctr[0] - ctr[0] // 2)
    ms = (time.perf_counter() - t0) * 1000.0
    return GapReport(
        verdict="close" if d <= k else "far", delta_root=float(d), reads=Xo.reads + Yo.reads,
        elapsed_ms=ms, n=len(Xo), k=k, K=k + 1, B=0, seed=None, profile="exact",
    )


@dataclass(frozen=True)
class GapParameters:
    B: int | None
    K: int | None
    k_bar: int
    exact_fallback: bool = False


SMALL_K = 3


def subpoly_branching(k: float) -> int:
    return 2 ** math.ceil(math.sqrt(math.log2(k)))


def subpoly_inflation(k: float) -> float:
    lg = math.log2(k)
    return math.sqrt(lg) * math.log2(max(lg, 2.0))


def corollary_parameterization(
    k: int,
    mode: Literal["subpoly", "polylog"],
    eps_exp: float | None = None,
    c: float = 1.0,
    inflate: bool = True,
    profile: Profile = "desk",
    n: int | None = None,
) -> GapParameters:
    if k < 2:
        raise ValueError("need k >= 2")
    if k <= SMALL_K:
        return GapParameters(None, None, k, exact_fallback=True)
    if mode == "subpoly":
        k_bar = int(k * 2 ** (2 * subpoly_inflation(k))) if inflate else k
        B = subpoly_branching(k_bar)
    elif mode == "polylog":
        if eps_exp is None or not 0 < eps_exp < 1:
            raise ValueError("polylog mode needs eps_exp in (0, 1)")
        k_bar = k
        B = math.ceil(math.log2(k) ** (c / eps_exp))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    B = max(2, B)
    K = paper_cap(n, k_bar, B) if profile == "paper" and n else desk_cap(k_bar, B)
    return GapParameters(B, K, k_bar)
