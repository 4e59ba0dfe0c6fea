"""Solver parameter profiles.

``paper`` keeps the asymptotic constants verbatim; ``desk`` swaps the
union-bound sized ones for values that keep runs tractable on a laptop.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field, replace
from typing import Literal

Profile = Literal["paper", "desk"]
PROFILES = ("paper", "desk")

DESK_EPS = 0.5
DESK_LEAF_EXPONENT = 4
PAPER_LEAF_EXPONENT = 100


def default_profile() -> Profile:
    p = os.environ.get("SUBED_PROFILE", "desk").strip().lower()
    if p not in PROFILES:
        raise ValueError(f"SUBED_PROFILE must be one of {PROFILES}, got {p!r}")
    return p  # type: ignore[return-value]


def log2(x: float) -> float:
    return math.log2(max(x, 2.0))


def leaf_cap(K: int, exponent: int, n: int) -> int:
    # K**exponent can be astronomically large; only min(n, .) matters
    if exponent * math.log2(max(K, 2)) >= math.log2(n) + 1:
        return n
    return max(1, K**exponent)


@dataclass(frozen=True)
class SolverConfig:
    K: int
    B: int
    n: int
    profile: Profile
    eps_psl: float
    delta_psl: float
    root_rate: float
    alpha0: float
    alpha_decay: float
    leaf_cap_exponent: int
    c_lambda: float = 8.0
    tester_delta: float = 0.01
    short_factor: float = 100.0
    interrupt_factor: float = 20.0
    audit_fraction: float = 0.0
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.K < 1 or self.B < 2 or self.n < 1:
            raise ValueError("need K >= 1, B >= 2, n >= 1")

    def alpha(self, depth: int) -> float:
        return self.alpha0 * (1.0 - self.alpha_decay) ** depth

    @property
    def leaf_cap(self) -> int:
        return leaf_cap(self.K, self.leaf_cap_exponent, self.n)

    @property
    def short_bound(self) -> float:
        return self.short_factor * self.K * self.K

    @property
    def interrupt_threshold(self) -> float:
        return self.interrupt_factor * self.K

    def with_(self, **kw) -> SolverConfig:
        return replace(self, **kw)


def _node_count(n: int, B: int, leaves: int) -> int:
    from .tree import PartitionTree

    return PartitionTree(n, B, leaves).node_count


def ako_config(n: int, K: int, B: int, profile: Profile | None = None) -> SolverConfig:
    profile = profile or default_profile()
    exp = PAPER_LEAF_EXPONENT if profile == "paper" else DESK_LEAF_EXPONENT
    decay = 1.0 / (2.0 * log2(n))
    if profile == "paper":
        eps, delta = decay, 0.01 / (K * n)
    else:
        nodes = _node_count(n, B, leaf_cap(K, exp, n))
        eps, delta = DESK_EPS, 0.01 / (K * nodes)
    return SolverConfig(
        K=K, B=B, n=n, profile=profile, eps_psl=eps, delta_psl=delta,
        root_rate=1000.0 / K, alpha0=2.0, alpha_decay=decay, leaf_cap_exponent=exp,
    )


def main_config(n: int, K: int, B: int, profile: Profile | None = None) -> SolverConfig:
    profile = profile or default_profile()
    exp = PAPER_LEAF_EXPONENT if profile == "paper" else DESK_LEAF_EXPONENT
    decay = 1.0 / (200.0 * log2(K))
    if profile == "paper":
        eps = decay
        delta = 0.01 * float(K) ** -101
        tdelta = 0.01 * float(K) ** -100
    else:
        nodes = _node_count(n, B, leaf_cap(K, exp, n))
        eps, delta, tdelta = DESK_EPS, 0.01 / (K * nodes), 0.01 / nodes
    cfg = SolverConfig(
        K=K, B=B, n=n, profile=profile, eps_psl=eps, delta_psl=delta,
        root_rate=1000.0 / K, alpha0=10.0, alpha_decay=decay, leaf_cap_exponent=exp,
        tester_delta=tdelta,
    )
    depth = math.ceil(math.log(max(cfg.leaf_cap, 2), B)) + 1
    if cfg.alpha(depth) < 5.0:
        raise ValueError("multiplicative accuracy would drop below 5")
    return cfg
