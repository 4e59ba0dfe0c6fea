"""Pruned tree-distance recursion with short, periodic and random-like rules.

The recursion is run breadth-first over the whole partition tree. This
lets every node whose Y-window failed the periodicity test act as a
monitor for its subtree: once one level below it holds more than
``interrupt_threshold`` such nodes, the node is resolved by the
random-like rule (if its matching test succeeds) and its subtree dropped.

The matching test of a node that failed the periodicity test is only
needed when its monitor trips, so it is run lazily at that moment.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .combine import combine_values
from .config import SolverConfig
from .exact import ShiftProfile, capped_edit_distance, many_offsets_2approx
from .precision import PrecisionParams, draw_replicas, recover_sums
from .strings import Period, StringOracle
from .testers import TesterVerdict, match_offsets, periodicity_test
from .tree import PartitionNode


class Rule(str, enum.Enum):
    SHORT = "ShortLeaf"
    PERIODIC = "PeriodicRule"
    RANDOM_LIKE = "RandomLikeInterrupt"
    RECURSED = "Recursed"


class BudgetExceeded(Exception):
    pass


@dataclass
class NodeOutcome:
    rule: Rule
    profile: ShiftProfile
    reads_used: int


class InterruptMonitor:
    """Per-level counts of failed periodicity tests below one owner."""

    def __init__(self, threshold: float):
        self.threshold = threshold
        self.counts: Counter[int] = Counter()

    def record(self, level: int) -> None:
        self.counts[level] += 1

    def tripped(self, level: int) -> bool:
        return self.counts[level] > self.threshold


@dataclass(eq=False)
class _State:
    node: PartitionNode
    rate: float
    owners: tuple[_State, ...]
    rule: Rule | None = None
    profile: np.ndarray | None = None
    children: list[_State] = field(default_factory=list)
    replicas: np.ndarray | None = None
    monitor: InterruptMonitor | None = None
    owner_done: bool = False
    interrupted: bool = False
    shift: int | None = None
    period: Period | None = None

    def dropped(self) -> bool:
        return any(o.interrupted for o in self.owners)


def periodic_rule(K: int, s_star: int, p: int) -> np.ndarray:
    d = np.abs(np.arange(-K, K + 1) - s_star) % p
    return np.minimum(2.0 * np.minimum(d, p - d), K)


def random_like_rule(K: int, s_star: int) -> np.ndarray:
    return np.minimum(2.0 * np.abs(np.arange(-K, K + 1) - s_star), K)


@dataclass
class Geometry:
    lo: int
    hi: int
    s_lo: int
    s_hi: int

    @property
    def W(self) -> int:
        return self.s_hi - self.s_lo


def geometry(v: PartitionNode, n: int, K: int) -> Geometry:
    lo, hi = v.interval
    return Geometry(lo, hi, max(-K, -lo), min(K, n - hi))


def deficit(g: Geometry, K: int) -> np.ndarray:
    """Length lost by clamping Y_{v,s}, per shift."""
    s = np.arange(-K, K + 1)
    return np.maximum(g.s_lo - s, 0) + np.maximum(s - g.s_hi, 0)


class MainSolver:
    def __init__(
        self,
        X: StringOracle,
        Y: StringOracle,
        config: SolverConfig,
        rng: np.random.Generator,
        budget: float | None = None,
    ):
        if len(X) != len(Y):
            raise ValueError("X and Y must have equal length")
        self.X, self.Y, self.cfg, self.rng = X, Y, config, rng
        self.n = len(X)
        self.K = config.K
        self.budget = budget
        self.lam = PrecisionParams(config.eps_psl, config.delta_psl, config.c_lambda).lam
        self.rules: Counter[str] = Counter()
        self.active = 0
        self.active_per_level: Counter[int] = Counter()
        self.audit_failures: list[tuple] = []
        self.audited = 0

    # -- accounting -------------------------------------------------------

    @property
    def reads(self) -> int:
        return self.X.reads + self.Y.reads

    def _check_budget(self) -> None:
        if self.budget is not None and self.reads > self.budget:
            raise BudgetExceeded(self.reads)

    def _charge(self, counter: list[int]) -> None:
        half = counter[0] // 2
        self.X.charge(half)
        self.Y.charge(counter[0] - half)

    # -- node rules -------------------------------------------------------

    def short_profile(self, v: PartitionNode) -> np.ndarray:
        K, n = self.K, self.n
        g = geometry(v, n, K)
        x = self.X.data[g.lo : g.hi]
        y = self.Y.data
        ctr = [0]
        out = np.full(2 * K + 1, float(K))
        left = g.s_lo + K  # shifts -K..s_lo-1 lose characters on the left
        vals = many_offsets_2approx(x, y[g.lo + g.s_lo : g.hi + g.s_hi], g.W, K, ctr, neg=left)
        out[: g.s_hi + K + 1] = vals
        right = K - g.s_hi
        if right:
            # mirror image handles windows that run past the end of Y
            xr = x[::-1]
            yr = y[g.lo + g.s_lo : g.hi + g.s_hi][::-1]
            rv = many_offsets_2approx(xr, yr, g.W, K, ctr, neg=right)
            out[g.s_hi + K + 1 :] = rv[:right][::-1]
        self._charge(ctr)
        return out

    def _matching(self, st: _State) -> TesterVerdict:
        g = geometry(st.node, self.n, self.K)
        Xv = self.X.window(g.lo, g.hi)
        Yv = self.Y.window(g.lo + g.s_lo, g.hi + g.s_hi)
        res = match_offsets(Xv, Yv, g.W, self.K, 3 * st.rate, self.cfg.tester_delta, self.rng)
        self._check_budget()
        return res

    def _periodicity(self, st: _State) -> TesterVerdict:
        g = geometry(st.node, self.n, self.K)
        Yv = self.Y.window(g.lo + g.s_lo, g.hi + g.s_hi)
        res = periodicity_test(Yv, 4 * self.K, 3 * st.rate, self.cfg.tester_delta, self.rng)
        self._check_budget()
        return res

    def _is_short(self, v: PartitionNode) -> bool:
        return v.is_leaf or len(v) <= self.cfg.short_bound

    def _emit(self, st: _State, rule: Rule, values: np.ndarray) -> None:
        st.rule = rule
        st.profile = values
        if rule in (Rule.PERIODIC, Rule.RANDOM_LIKE) and self.cfg.audit_fraction > 0:
            if self.rng.random() < self.cfg.audit_fraction:
                self._audit(st)

    def _audit(self, st: _State) -> None:
        """Compare a rule profile with exact capped distances on unclamped shifts."""
        K = self.K
        g = geometry(st.node, self.n, K)
        x = self.X.data[g.lo : g.hi]
        self.audited += 1
        for s in range(g.s_lo, g.s_hi + 1):
            exact = capped_edit_distance(x, self.Y.data[g.lo + s : g.hi + s], K)
            if exact != st.profile[s + K]:
                self.audit_failures.append((st.node.interval, st.rule.value, s, exact, st.profile[s + K]))
                return

    # -- engine -------------------------------------------------------------

    def solve(self, root: PartitionNode, rate: float) -> NodeOutcome:
        start = self.reads
        K = self.K
        top = _State(root, rate, ())
        order: list[_State] = []
        frontier = [top]
        while frontier:
            level = frontier[0].node.depth
            short, tested = [], []
            for st in frontier:
                self.active += 1
                self.active_per_level[level] += 1
                if self._is_short(st.node):
                    short.append(st)
                    continue
                per = self._periodicity(st)
                if per.close:
                    match = self._matching(st)
                    if match.close:
                        g = geometry(st.node, self.n, K)
                        s_star = g.s_lo + match.witness
                        vals = periodic_rule(K, s_star, len(per.witness))
                        st.shift, st.period = s_star, per.witness
                        self._emit(st, Rule.PERIODIC, np.maximum(vals, np.minimum(deficit(g, K), K)))
                        continue
                else:
                    for o in st.owners:
                        if not o.owner_done:
                            o.monitor.record(level)
                    st.monitor = InterruptMonitor(self.cfg.interrupt_threshold)
                tested.append(st)
            self._check_monitors(frontier, level)
            nxt = []
            for st in short:
                if st.dropped():
                    continue
                self._emit(st, Rule.SHORT, self.short_profile(st.node))
                self._check_budget()
            for st in tested:
                if st.dropped() or st.interrupted:
                    continue
                kids = st.node.children
                st.replicas = draw_replicas(self.lam, len(kids), self.rng)
                u = np.minimum(st.replicas.min(axis=1), 1.0)
                owners = st.owners + ((st,) if st.monitor is not None else ())
                owners = tuple(o for o in owners if not o.owner_done)
                st.children = [_State(c, st.rate / u[i], owners) for i, c in enumerate(kids)]
                st.rule = Rule.RECURSED
                order.append(st)
                nxt.extend(st.children)
            frontier = nxt
        for st in reversed(order):
            if st.dropped() or st.interrupted:
                continue
            est = np.stack([combine_values(c.profile) for c in st.children])
            st.profile = np.minimum(recover_sums(est, st.replicas), K)
        self._tally(top)
        return NodeOutcome(top.rule, ShiftProfile(K, top.profile), self.reads - start)

    def _check_monitors(self, frontier: list[_State], level: int) -> None:
        owners = {id(o): o for st in frontier for o in st.owners}
        for o in sorted(owners.values(), key=lambda o: -o.node.depth):
            if o.owner_done or o.dropped() or not o.monitor.tripped(level):
                continue
            o.owner_done = True
            match = self._matching(o)
            if not match.close:
                continue
            g = geometry(o.node, self.n, self.K)
            s_star = g.s_lo + match.witness
            o.shift = s_star
            o.interrupted = True
            vals = random_like_rule(self.K, s_star)
            self._emit(o, Rule.RANDOM_LIKE, np.maximum(vals, np.minimum(deficit(g, self.K), self.K)))

    def _tally(self, top: _State) -> None:
        stack = [top]
        while stack:
            st = stack.pop()
            if st.rule is None:
                continue
            self.rules[st.rule.value] += 1
            if st.rule is Rule.RECURSED:
                stack.extend(st.children)


def solve_node_main(
    X: StringOracle,
    Y: StringOracle,
    v: PartitionNode,
    r_v: float,
    config: SolverConfig,
    rng: np.random.Generator,
    budget: float | None = None,
) -> NodeOutcome:
    return MainSolver(X, Y, config, rng, budget).solve(v, r_v)


def active_node_bound(K: int, D: int, B: int, C: float = 25.0) -> float:
    return C * (K * max(D, 1) * B) ** 2


def tree_depth(cfg: SolverConfig) -> int:
    from .tree import PartitionTree

    return PartitionTree(cfg.n, cfg.B, cfg.leaf_cap).depth
