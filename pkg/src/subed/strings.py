"""Read-counting string access, periods and block periodicity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, Sequence

import numpy as np

Text = bytes | bytearray | str


def as_bytes(s: Text | Sequence[int]) -> bytes:
    if isinstance(s, bytes):
        return s
    if isinstance(s, str):
        return s.encode("latin-1")
    return bytes(s)


class CharSource(Protocol):
    """Anything the testers can probe one character at a time."""

    def __len__(self) -> int: ...

    def peek(self, idx: np.ndarray) -> np.ndarray: ...

    def charge(self, count: int) -> None: ...


class StringOracle:
    """Immutable byte string that counts every character it hands out.

    ``data`` and ``array`` give unmetered access. Solver code must go
    through ``char_at``/``read``/``chars_at`` or pair ``peek`` with an
    explicit ``charge``.
    """

    __slots__ = ("data", "array", "reads")

    def __init__(self, data: Text | Sequence[int]):
        self.data = as_bytes(data)
        self.array = np.frombuffer(self.data, dtype=np.uint8)
        self.reads = 0

    def __len__(self) -> int:
        return len(self.data)

    def __repr__(self) -> str:
        return f"StringOracle(n={len(self.data)}, reads={self.reads})"

    def char_at(self, i: int) -> int:
        assert 0 <= i < len(self.data), f"index {i} out of range"
        self.reads += 1
        return self.data[i]

    def read(self, i: int, j: int) -> bytes:
        """Clamped substring S[i..j), charged per character returned."""
        lo, hi = clamped_range(len(self.data), i, j)
        self.reads += hi - lo
        return self.data[lo:hi]

    def chars_at(self, idx: np.ndarray) -> np.ndarray:
        self.reads += len(idx)
        return self.array[idx]

    def peek(self, idx: np.ndarray) -> np.ndarray:
        return self.array[idx]

    def charge(self, count: int) -> None:
        self.reads += int(count)

    def window(self, lo: int, hi: int) -> Window:
        lo, hi = clamped_range(len(self.data), lo, hi)
        return Window(self, lo, hi - lo)


class Window:
    """Metered view of ``oracle[offset .. offset+length)``."""

    __slots__ = ("oracle", "offset", "length")

    def __init__(self, oracle: StringOracle, offset: int, length: int):
        assert 0 <= offset and offset + length <= len(oracle)
        self.oracle = oracle
        self.offset = offset
        self.length = length

    def __len__(self) -> int:
        return self.length

    def char_at(self, i: int) -> int:
        assert 0 <= i < self.length
        return self.oracle.char_at(self.offset + i)

    def read(self, i: int, j: int) -> bytes:
        lo, hi = clamped_range(self.length, i, j)
        return self.oracle.read(self.offset + lo, self.offset + hi)

    def peek(self, idx: np.ndarray) -> np.ndarray:
        return self.oracle.array[self.offset + idx]

    def charge(self, count: int) -> None:
        self.oracle.charge(count)

    def sub(self, i: int, j: int) -> Window:
        lo, hi = clamped_range(self.length, i, j)
        return Window(self.oracle, self.offset + lo, hi - lo)

    def raw(self) -> bytes:
        """Unmetered content, for oracles and audits only."""
        return self.oracle.data[self.offset : self.offset + self.length]


class PeriodicView:
    """P* truncated to ``length``; scratch space, so probing is free."""

    __slots__ = ("pattern", "length", "_arr")

    def __init__(self, pattern: bytes, length: int):
        assert len(pattern) > 0
        self.pattern = pattern
        self.length = length
        self._arr = np.frombuffer(pattern, dtype=np.uint8)

    def __len__(self) -> int:
        return self.length

    def peek(self, idx: np.ndarray) -> np.ndarray:
        return self._arr[idx % len(self.pattern)]

    def charge(self, count: int) -> None:
        pass


def as_source(s: CharSource | Text) -> CharSource:
    if isinstance(s, (bytes, bytearray, str)):
        return StringOracle(s)
    return s


def char_at(S: StringOracle, i: int) -> int:
    return S.char_at(i)


def clamped_range(n: int, i: int, j: int) -> tuple[int, int]:
    lo = max(i, 0)
    hi = min(j, n)
    if hi < lo:
        hi = lo
    return lo, hi


def hamming_distance(X: Text, Y: Text) -> int:
    x = np.frombuffer(as_bytes(X), dtype=np.uint8)
    y = np.frombuffer(as_bytes(Y), dtype=np.uint8)
    if len(x) != len(y):
        raise ValueError("Hamming distance needs equal lengths")
    return int(np.count_nonzero(x != y))


@dataclass(frozen=True)
class Period:
    pattern: bytes

    def __len__(self) -> int:
        return len(self.pattern)

    @property
    def primitive(self) -> bool:
        return is_primitive(self.pattern)

    def expand(self, n: int) -> bytes:
        p = len(self.pattern)
        return (self.pattern * (n // p + 1))[:n]


def failure_function(P: bytes) -> list[int]:
    """KMP border table: fail[i] is the longest proper border of P[0..i)."""
    m = len(P)
    fail = [0] * (m + 1)
    fail[0] = -1
    k = -1
    for i in range(m):
        while k >= 0 and P[k] != P[i]:
            k = fail[k]
        k += 1
        fail[i + 1] = k
    return fail


def smallest_period(X: Text, cap: int | None = None) -> Period | None:
    X = as_bytes(X)
    if not X:
        raise ValueError("empty string has no period")
    fail = failure_function(X)
    p = len(X) - fail[len(X)]
    if cap is not None and p > cap:
        return None
    return Period(X[:p])


def is_primitive(P: Text) -> bool:
    """True when P is not a proper power u^j with j >= 2."""
    P = as_bytes(P)
    return len(P) > 0 and (P + P).find(P, 1) == len(P)


def find_all(pattern: bytes, text: bytes) -> list[int]:
    """All occurrences of ``pattern`` in ``text`` via the KMP automaton."""
    m = len(pattern)
    if m == 0:
        return list(range(len(text) + 1))
    fail = failure_function(pattern)
    out = []
    k = 0
    for i, c in enumerate(text):
        while k >= 0 and (k == m or pattern[k] != c):
            k = fail[k]
        k += 1
        if k == m:
            out.append(i - m + 1)
    return out


def _mismatch_runs(y: np.ndarray, p: int) -> np.ndarray:
    """run[a] = length of the longest stretch starting at a with y[i] == y[i+p]."""
    n = len(y)
    run = np.zeros(n + 1, dtype=np.int64)
    if p >= n:
        return run
    eq = y[p:] == y[:-p]
    # next index >= a where eq is False, within [0, n-p)
    m = n - p
    bad = np.flatnonzero(~eq)
    nxt = np.full(m + 1, m, dtype=np.int64)
    if len(bad):
        marks = np.full(m + 1, m, dtype=np.int64)
        marks[bad] = bad
        nxt = np.minimum.accumulate(marks[::-1])[::-1]
    run[: m + 1] = nxt - np.arange(m + 1)
    return run


def block_periodicity(Y: Text, K: int) -> int:
    """Fewest K-periodic blocks partitioning Y, by greedy longest extension."""
    y = np.frombuffer(as_bytes(Y), dtype=np.uint8)
    n = len(y)
    if n == 0:
        return 0
    if K >= n:
        return 1
    runs = [_mismatch_runs(y, p) for p in range(1, K + 1)]
    count = 0
    a = 0
    while a < n:
        # any block of length <= K is trivially K-periodic
        end = min(n, a + K)
        for p, run in enumerate(runs, start=1):
            if a + p <= n:
                end = max(end, min(n, a + p + int(run[a])))
        count += 1
        a = end
    return count


def is_periodic(Y: Text, K: int) -> bool:
    Y = as_bytes(Y)
    return len(Y) == 0 or len(smallest_period(Y).pattern) <= K


def block_periodicity_exhaustive(Y: Text, K: int) -> int:
    """Interval-partition DP over all cut points; cubic, for tiny inputs."""
    Y = as_bytes(Y)
    n = len(Y)
    best = [0] + [n + 1] * n
    for j in range(1, n + 1):
        for i in range(j):
            if best[i] + 1 < best[j] and is_periodic(Y[i:j], K):
                best[j] = best[i] + 1
    return best[n]
