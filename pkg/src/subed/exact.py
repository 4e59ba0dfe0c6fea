"""Exact and 2-approximate edit distance.

All routines here are deterministic. ``lce`` and the diagonal methods take
an optional ``counter`` list; when given, ``counter[0]`` is increased by the
number of characters a direct comparison scheme would have read.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .strings import Text, as_bytes

_INF = float("inf")


@dataclass(frozen=True)
class ShiftProfile:
    """Distance estimates for shifts -K..K, stored at index s + K."""

    K: int
    values: np.ndarray

    def __post_init__(self):
        assert len(self.values) == 2 * self.K + 1

    def __getitem__(self, s: int) -> float:
        return float(self.values[s + self.K])

    def shifts(self) -> range:
        return range(-self.K, self.K + 1)

    def capped(self, cap: float | None = None) -> ShiftProfile:
        cap = self.K if cap is None else cap
        return ShiftProfile(self.K, np.minimum(self.values, cap))

    def tolist(self) -> list[float]:
        return [float(v) for v in self.values]


@dataclass(frozen=True)
class Alignment:
    """Monotone map A over 0..|X| with A(0) = 0 and A(|X|) = |Y|.

    For |X| = 0 the map is the single point A(0) = 0 and the |Y| leftover
    characters are charged as insertions by ``alignment_cost``.
    """

    map: tuple[int, ...]
    x_len: int
    y_len: int


def edit_distance(X: Text, Y: Text) -> int:
    x = np.frombuffer(as_bytes(X), dtype=np.uint8)
    y = np.frombuffer(as_bytes(Y), dtype=np.uint8)
    if len(x) < len(y):
        x, y = y, x
    n = len(y)
    if n == 0:
        return len(x)
    ar = np.arange(n + 1, dtype=np.int64)
    prev = ar.copy()
    for i, c in enumerate(x, start=1):
        sub = prev[:-1] + (y != c)
        cur = np.empty(n + 1, dtype=np.int64)
        cur[0] = i
        cur[1:] = np.minimum(sub, prev[1:] + 1)
        # horizontal moves: cur[j] = min_k (cur[k] + j - k)
        cur = np.minimum.accumulate(cur - ar) + ar
        prev = cur
    return int(prev[n])


def _dp_table(x: bytes, y: bytes) -> np.ndarray:
    m, n = len(x), len(y)
    D = np.zeros((m + 1, n + 1), dtype=np.int64)
    D[0] = np.arange(n + 1)
    D[:, 0] = np.arange(m + 1)
    ya = np.frombuffer(y, dtype=np.uint8)
    ar = np.arange(n + 1, dtype=np.int64)
    for i in range(1, m + 1):
        row = np.empty(n + 1, dtype=np.int64)
        row[0] = i
        row[1:] = np.minimum(D[i - 1, :-1] + (ya != x[i - 1]), D[i - 1, 1:] + 1)
        D[i] = np.minimum.accumulate(row - ar) + ar
    return D


def optimal_alignment(X: Text, Y: Text) -> Alignment:
    x, y = as_bytes(X), as_bytes(Y)
    m, n = len(x), len(y)
    if m == 0:
        return Alignment((0,), 0, n)
    D = _dp_table(x, y)
    # Walk back from (m, n); entry[i] records the column where the path
    # first reaches row i.
    entry = [0] * (m + 1)
    i, j = m, n
    while i > 0:
        if j > 0 and D[i, j] == D[i - 1, j - 1] + (x[i - 1] != y[j - 1]):
            i, j = i - 1, j - 1
            entry[i + 1] = j + 1
        elif D[i, j] == D[i - 1, j] + 1:
            i -= 1
            entry[i + 1] = j
        else:
            j -= 1
    A = [0] * (m + 1)
    for t in range(1, m):
        A[t] = entry[t]
    A[m] = n
    return Alignment(tuple(A), m, n)


def _char_vs_block(c: int, block: bytes) -> int:
    if not block:
        return 1
    return len(block) - 1 + (0 if c in block else 1)


def alignment_cost(X: Text, Y: Text, A: Alignment) -> int:
    """Sum over i of ED(X[i], Y[A(i)..A(i+1)))."""
    x, y = as_bytes(X), as_bytes(Y)
    if len(x) == 0:
        return len(y)
    a = A.map
    return sum(_char_vs_block(x[i], y[a[i] : a[i + 1]]) for i in range(len(x)))


def lce(X: Text, i: int, Y: Text, j: int, counter: list[int] | None = None) -> int:
    """Longest common extension of X[i..) and Y[j..) by direct comparison."""
    n = min(len(X) - i, len(Y) - j)
    if n <= 0:
        return 0
    ell = 0
    if X[i] == Y[j]:
        step = 16
        ell = 1
        while ell < n:
            t = min(step, n - ell)
            if X[i + ell : i + ell + t] == Y[j + ell : j + ell + t]:
                ell += t
                step *= 2
                continue
            lo, hi = ell, ell + t
            while hi - lo > 1:
                mid = (lo + hi) // 2
                if X[i + lo : i + mid] == Y[j + lo : j + mid]:
                    lo = mid
                else:
                    hi = mid
            ell = lo
            break
    if counter is not None:
        counter[0] += 2 * (ell + (1 if ell < n else 0))
    return ell


def _frontier(
    x: bytes, y: bytes, W: int, cap: int, counter: list[int] | None, neg: int = 0
) -> np.ndarray:
    """Diagonal method on the table D[i][j] = min_{0<=t<=W} ED(x[0..i), y[t..j)).

    Returns out[t + neg] = min(D[m][m+t], cap) for t in -neg..W. Requires
    |y| >= |x| + W.
    """
    m, n = len(x), len(y)
    out = np.full(neg + W + 1, cap, dtype=np.int64)
    lo_d, hi_d = -neg - cap, W + cap
    size = hi_d - lo_d + 1
    NEG = -(10**9)
    L = [NEG] * size
    for d in range(0, W + 1):
        L[d - lo_d] = 0
    done = [False] * (neg + W + 1)
    remaining = neg + W + 1
    for t in range(-neg, W + 1):
        if m + t < 0:
            # target column before the window start: only deletions
            out[t + neg] = min(m, cap)
            done[t + neg] = True
            remaining -= 1
    e = 0
    while remaining > 0:
        for k in range(size):
            row = L[k]
            if row < 0:
                continue
            d = k + lo_d
            lim = min(m, n - d)
            if row < lim:
                row += lce(x, row, y, row + d, counter)
                L[k] = row
            if -neg <= d <= W and row >= m and not done[d + neg]:
                done[d + neg] = True
                out[d + neg] = e
                remaining -= 1
        if e + 1 >= cap:
            break
        e += 1
        L = _advance(L, lo_d, m, n, NEG)
    return out


def _advance(L: list[int], lo_d: int, m: int, n: int, NEG: int) -> list[int]:
    size = len(L)
    nxt = [NEG] * size
    for k in range(size):
        best = NEG
        if L[k] >= 0:
            best = L[k] + 1
        if k > 0 and L[k - 1] > best:
            best = L[k - 1]
        if k + 1 < size and L[k + 1] >= 0 and L[k + 1] + 1 > best:
            best = L[k + 1] + 1
        if best >= 0:
            lim = min(m, n - (k + lo_d))
            best = NEG if lim < 0 else min(best, lim)
        nxt[k] = best
    return nxt


def capped_edit_distance(X: Text, Y: Text, K: int, counter: list[int] | None = None) -> int:
    """min(ED(X, Y), K) by the k-differences diagonal method."""
    if K <= 0:
        return 0
    x, y = as_bytes(X), as_bytes(Y)
    if abs(len(x) - len(y)) >= K:
        return K
    if len(x) > len(y):
        x, y = y, x
    # Only the diagonal d = |y| - |x| ends at (m, n).
    dlt = len(y) - len(x)
    return int(_frontier_single(x, y, dlt, K, counter))


def _frontier_single(x: bytes, y: bytes, target: int, cap: int, counter) -> int:
    m, n = len(x), len(y)
    lo_d, hi_d = -cap, cap
    size = hi_d - lo_d + 1
    NEG = -(10**9)
    L = [NEG] * size
    L[-lo_d] = 0
    e = 0
    while True:
        for k in range(size):
            row = L[k]
            if row < 0:
                continue
            d = k + lo_d
            lim = min(m, n - d)
            if row < lim:
                row += lce(x, row, y, row + d, counter)
                L[k] = row
        if L[target - lo_d] >= m:
            return e
        if e + 1 >= cap:
            return cap
        e += 1
        L = _advance(L, lo_d, m, n, NEG)


def exact_edit_distance(X: Text, Y: Text, counter: list[int] | None = None) -> int:
    """Exact ED by capped runs with a doubling cap; fast when ED is small."""
    x, y = as_bytes(X), as_bytes(Y)
    cap = max(8, abs(len(x) - len(y)) + 1)
    while True:
        d = capped_edit_distance(x, y, cap, counter)
        if d < cap:
            return d
        if cap > len(x) + len(y):
            return edit_distance(x, y)
        cap *= 2


def many_offsets_2approx(
    X: Text, Ywin: Text, W: int, cap: int, counter: list[int] | None = None, neg: int = 0
) -> np.ndarray:
    """Approximate min(ED(X, Ywin[t..t+|X|)), cap) for every offset t in 0..W.

    Each output e satisfies e <= min(ED, cap) <= min(2e, cap). With ``neg``
    the result also covers the truncated windows Ywin[0..|X|+t) for
    t in -neg..-1 (same guarantee); entry t sits at index t + neg.
    """
    x, y = as_bytes(X), as_bytes(Ywin)
    if len(y) != len(x) + W:
        raise ValueError("window must be |X| + W long")
    if cap <= 0:
        return np.zeros(neg + W + 1, dtype=np.int64)
    return _frontier(x, y, W, cap, counter, neg)


def ed_many_shifts_2approx(X: Text, Y: Text, K: int, counter: list[int] | None = None) -> ShiftProfile:
    x, y = as_bytes(X), as_bytes(Y)
    if len(y) != len(x) + 2 * K:
        raise ValueError("need |Y| = |X| + 2K")
    vals = many_offsets_2approx(x, y, 2 * K, K, counter)
    return ShiftProfile(K, vals.astype(np.float64))
