"""Quick randomized invariant checks that ship with the package."""

from __future__ import annotations

from typing import Callable

import numpy as np

from ..combine import combine_bruteforce, combine_values
from ..config import ako_config, main_config
from ..exact import (
    alignment_cost,
    capped_edit_distance,
    ed_many_shifts_2approx,
    edit_distance,
    optimal_alignment,
)
from ..ako import solve_node_ako
from ..precision import PrecisionParams, draw_replicas, recover_sums
from ..solver import MainSolver, periodic_rule
from ..strings import StringOracle, block_periodicity, block_periodicity_exhaustive, smallest_period
from ..testers import equality_test, matching_test, periodicity_test
from ..tree import PartitionTree, tree_distance_exact
from .generators import random_primitive, random_string

Check = Callable[[np.random.Generator], None]


def _pair(rng, n_max=40, a=3):
    n = int(rng.integers(0, n_max))
    m = int(rng.integers(0, n_max))
    return random_string(n, a, rng), random_string(m, a, rng)


def check_exact(rng):
    for _ in range(100):
        X, Y = _pair(rng)
        d = edit_distance(X, Y)
        K = int(rng.integers(1, 20))
        assert capped_edit_distance(X, Y, K) == min(d, K)
        assert alignment_cost(X, Y, optimal_alignment(X, Y)) == d


def check_many_shifts(rng):
    for _ in range(30):
        K = int(rng.integers(1, 6))
        X = random_string(int(rng.integers(1, 30)), 2, rng)
        Y = random_string(len(X) + 2 * K, 2, rng)
        prof = ed_many_shifts_2approx(X, Y, K)
        for s in range(-K, K + 1):
            e = prof[s]
            true = min(edit_distance(X, Y[K + s : K + s + len(X)]), K)
            assert e <= true <= min(2 * e, K)


def check_combine(rng):
    for _ in range(200):
        a = rng.integers(0, 50, size=2 * int(rng.integers(0, 20)) + 1)
        assert np.array_equal(combine_values(a), combine_bruteforce(a))


def check_tree(rng):
    for _ in range(20):
        n = int(rng.integers(1, 40))
        B = int(rng.integers(2, 5))
        X, Y = random_string(n, 2, rng), random_string(n, 2, rng)
        root = PartitionTree(n, B, n).root
        td = tree_distance_exact(X, Y, root, n, capped=False)
        ed = edit_distance(X, Y)
        assert ed <= td <= 2 * B * max(root.tree.depth, 1) * ed


def check_periods(rng):
    for _ in range(50):
        Y = random_string(int(rng.integers(1, 14)), 2, rng)
        K = int(rng.integers(1, 4))
        assert block_periodicity(Y, K) == block_periodicity_exhaustive(Y, K)
        P = smallest_period(Y).pattern
        assert (P * len(Y))[: len(Y)] == Y


def check_precision(rng):
    params = PrecisionParams(0.25, 0.05)
    A = rng.random((50, 1))
    ok = 0
    for _ in range(100):
        reps = draw_replicas(params.lam, 50, rng)
        est = recover_sums(A, reps)[0]
        ok += A.sum() / 1.25 <= est <= 1.25 * A.sum()
    assert ok >= 85


def check_testers(rng):
    for _ in range(200):
        X = random_string(64, 2, rng)
        Y = bytearray(X)
        Y[int(rng.integers(64))] ^= 1
        res = equality_test(X, bytes(Y), 0.5, 0.1, rng)
        if not res.close:
            assert X[res.witness] != Y[res.witness]
    P = random_primitive(3, 3, rng)
    X = (P * 40)[:100]
    assert periodicity_test(X, 4, 1.0, 0.01, rng).close
    K = 4
    X = random_string(80, 4, rng)
    Y = random_string(K + 1, 4, rng) + X + random_string(K - 1, 4, rng)
    res = matching_test(X, Y, K, 1.0, 0.01, rng)
    assert res.close and res.witness == 1


def check_rules(rng):
    P = random_primitive(3, 3, rng)
    K = 4
    Y = (P * 20)[:40]
    for s in range(-K, K + 1):
        for t in range(-K, K + 1):
            ys, yt = Y[K + s : 40 - K + s], Y[K + t : 40 - K + t]
            assert edit_distance(ys, yt) == periodic_rule(100, t, len(P))[s + 100]


def check_solvers(rng):
    n, K, B = 256, 4, 2
    X = random_string(n, 4, rng)
    cfg = ako_config(n, K, B, "desk")
    root = PartitionTree(n, B, cfg.leaf_cap).root
    prof = solve_node_ako(StringOracle(X), StringOracle(X), root, cfg.root_rate, cfg, rng)
    assert prof[0] <= 1.0 / cfg.root_rate + 1e-9
    mcfg = main_config(n, K, B, "desk")
    out = MainSolver(StringOracle(X), StringOracle(X), mcfg, rng).solve(root, mcfg.root_rate)
    assert out.profile[0] == 0


CHECKS: dict[str, Check] = {
    "exact": check_exact,
    "many_shifts": check_many_shifts,
    "combine": check_combine,
    "tree": check_tree,
    "periods": check_periods,
    "precision": check_precision,
    "testers": check_testers,
    "rules": check_rules,
    "solvers": check_solvers,
}


def run(seed: int = 0, echo: Callable[[str], None] = print) -> bool:
    ok = True
    for i, (name, fn) in enumerate(CHECKS.items()):
        try:
            fn(np.random.default_rng([seed, i]))
            echo(f"PASS {name}")
        except AssertionError as e:
            ok = False
            echo(f"FAIL {name}: {e or 'assertion failed'}")
    return ok

