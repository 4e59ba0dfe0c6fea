"""Sublinear one-sided testers for equality, periodicity and matching.

Inputs are metered sources (``StringOracle``/``Window``) or plain bytes.
Every reported Far(i) comes with a mismatch that was actually observed.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .strings import CharSource, Period, PeriodicView, Text, as_source, find_all, smallest_period


class Verdict(enum.Enum):
    CLOSE = "close"
    FAR = "far"


@dataclass(frozen=True)
class TesterVerdict:
    kind: Verdict
    witness: int | Period | None = None

    @property
    def close(self) -> bool:
        return self.kind is Verdict.CLOSE


FAR = TesterVerdict(Verdict.FAR)


class _Shifted:
    """Source[offset .. offset+length) without copying."""

    __slots__ = ("src", "offset", "length")

    def __init__(self, src: CharSource, offset: int, length: int):
        self.src, self.offset, self.length = src, offset, length

    def __len__(self) -> int:
        return self.length

    def peek(self, idx: np.ndarray) -> np.ndarray:
        return self.src.peek(self.offset + idx)

    def charge(self, count: int) -> None:
        self.src.charge(count)


def sample_count(n: int, r: float, delta: float) -> int:
    return math.ceil(r * n * math.log(1.0 / delta))


def _first_mismatch(X: CharSource, Y: CharSource, positions: np.ndarray) -> int | None:
    """Probe positions in order; charge both sides up to the first mismatch."""
    start, step = 0, 32
    total = len(positions)
    while start < total:
        idx = positions[start : start + step]
        diff = np.flatnonzero(X.peek(idx) != Y.peek(idx))
        if len(diff):
            k = int(diff[0]) + 1
            X.charge(k)
            Y.charge(k)
            return int(idx[k - 1])
        X.charge(len(idx))
        Y.charge(len(idx))
        start += step
        step *= 2
    return None


def equality_test(X, Y, r: float, delta: float, rng: np.random.Generator) -> TesterVerdict:
    X, Y = as_source(X), as_source(Y)
    n = len(X)
    if len(Y) != n:
        raise ValueError("equality test needs equal lengths")
    if n == 0:
        return TesterVerdict(Verdict.CLOSE)
    m = sample_count(n, r, delta)
    if m >= n:
        # at least as many samples as positions: check all of them
        positions = rng.permutation(n)
    else:
        positions = rng.integers(0, n, size=m)
    i = _first_mismatch(X, Y, positions)
    if i is None:
        return TesterVerdict(Verdict.CLOSE)
    return TesterVerdict(Verdict.FAR, i)


def _read_prefix(X: CharSource, length: int) -> bytes:
    idx = np.arange(length)
    X.charge(length)
    return X.peek(idx).tobytes()


def periodicity_test(X, K: int, r: float, delta: float, rng: np.random.Generator) -> TesterVerdict:
    X = as_source(X)
    if K < 1 or len(X) < 2 * K:
        raise ValueError("periodicity test needs K >= 1 and |X| >= 2K")
    P = smallest_period(_read_prefix(X, 2 * K), cap=K)
    if P is None:
        return FAR
    res = equality_test(X, PeriodicView(P.pattern, len(X)), r, delta, rng)
    if res.close:
        return TesterVerdict(Verdict.CLOSE, P)
    return res


def matching_test(X, Y, K: int, r: float, delta: float, rng: np.random.Generator) -> TesterVerdict:
    """Close(s*) with HD(X, Y[K+s* .. K+s*+|X|)) small, or Far."""
    X, Y = as_source(X), as_source(Y)
    if len(Y) != len(X) + 2 * K:
        raise ValueError("matching test needs |Y| = |X| + 2K")
    res = match_offsets(X, Y, 2 * K, K, r, delta, rng)
    if res.close:
        return TesterVerdict(Verdict.CLOSE, res.witness - K)
    return res


def match_offsets(
    X: CharSource, Y: CharSource, W: int, K: int, r: float, delta: float, rng: np.random.Generator
) -> TesterVerdict:
    """Matching test over offsets 0..W (W <= 2K) with |Y| = |X| + W.

    Close carries the offset t such that X is close to Y[t .. t+|X|).
    """
    n = len(X)
    if len(Y) != n + W or W > 2 * K or n < 2 * K:
        raise ValueError("bad matching-test geometry")
    L = 2 * K
    d3 = delta / 3.0

    def at(t: int) -> _Shifted:
        return _Shifted(Y, t, n)

    # Align the prefixes.
    head = _read_prefix(X, L)
    text = _read_prefix(Y, min(len(Y), W + L))
    S = [t for t in find_all(head, text) if t <= W]
    if not S:
        return FAR
    if len(S) == 1:
        t = S[0]
        ok = equality_test(X, at(t), r, d3, rng)
        return TesterVerdict(Verdict.CLOSE, t) if ok.close else FAR

    # Two aligned prefixes force a period of the prefix.
    t0, t1 = S[0], S[1]
    P = PeriodicView(head[: t1 - t0], n)
    Yt = at(t0)
    res = equality_test(X, P, 2 * r, d3, rng)
    if res.close:
        res = equality_test(Yt, P, 2 * r, d3, rng)
        if res.close:
            return TesterVerdict(Verdict.CLOSE, t0)
    i0 = res.witness

    # Locate a leading mismatch: [lo, lo+L) clean, hi a mismatch.
    def bad(positions: np.ndarray) -> np.ndarray:
        X.charge(len(positions))
        Y.charge(len(positions))
        pp = P.peek(positions)
        return (X.peek(positions) != pp) | (Yt.peek(positions) != pp)

    lo, hi = 0, i0
    while hi > lo + 2 * L:
        mid = (lo + hi + 1) // 2
        win = np.arange(mid, min(mid + L + 1, hi))
        hits = np.flatnonzero(bad(win))
        if len(hits):
            hi = int(win[hits[0]])
        else:
            lo = mid
    win = np.arange(lo + L, hi + 1)
    hits = np.flatnonzero(bad(win))
    i = int(win[hits[0]])

    # The mismatch in X (or in Y_t) pins down the unique candidate.
    x_bad = int(X.peek(np.array([i]))[0]) != int(P.peek(np.array([i]))[0])
    if x_bad:
        # Y's matching break may sit past |X|, so search all of Y
        span = np.arange(i, min(i + W - t0, n + W - t0 - 1) + 1)
        other = Yt
        sign = 1
    else:
        span = np.arange(i + 1, min(i + t0, n - 1) + 1)
        other = X
        sign = -1
    other.charge(len(span))
    diff = np.flatnonzero(other.peek(span) != P.peek(span)) if len(span) else span
    if len(diff):
        t_star = t0 + sign * (int(span[diff[0]]) - i)
    elif not x_bad and i + t0 > n - 1:
        # X stays periodic to its end: the latest aligned offset ending before the break
        fits = [t for t in S if t + n <= t0 + i]
        if not fits:
            return FAR
        t_star = fits[-1]
    else:
        return FAR
    if not 0 <= t_star <= W:
        return FAR
    ok = equality_test(X, at(t_star), r, d3, rng)
    return TesterVerdict(Verdict.CLOSE, t_star) if ok.close else FAR
