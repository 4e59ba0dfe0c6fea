"""Balanced B-ary partition trees and exact tree distance."""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .combine import combine_values
from .exact import ShiftProfile, edit_distance
from .strings import Text, as_bytes


class PartitionTree:
    """Shared, read-only description of the whole tree.

    Leaves are numbered 0..L-1 from left to right; leaf t covers
    ``q + (1 if t < rem else 0)`` positions, with ``q, rem = divmod(n, L)``.
    """

    def __init__(self, n: int, B: int, leaf_cap: int):
        if n < 1 or B < 2 or leaf_cap < 1:
            raise ValueError("need n >= 1, B >= 2, leaf_cap >= 1")
        self.n = n
        self.B = B
        self.leaves = min(n, leaf_cap)
        self.q, self.rem = divmod(n, self.leaves)
        self.depth = _depth(self.leaves, B)
        self.root = PartitionNode(self, 0, self.leaves, 0)

    def leaf_start(self, t: int) -> int:
        return t * self.q + min(t, self.rem)

    @cached_property
    def node_count(self) -> int:
        cache: dict[int, int] = {}

        def memo(c: int) -> int:
            if c not in cache:
                cache[c] = 1 if c == 1 else 1 + sum(memo(s) for s in _split(c, self.B))
            return cache[c]

        return memo(self.leaves)


def _split(c: int, B: int) -> list[int]:
    k = min(B, c)
    q, r = divmod(c, k)
    return [q + (1 if i < r else 0) for i in range(k)]


def _depth(c: int, B: int) -> int:
    d = 0
    while c > 1:
        c = max(_split(c, B))
        d += 1
    return d


class PartitionNode:
    """Node covering leaves [a, b); children are materialised on first use."""

    def __init__(self, tree: PartitionTree, a: int, b: int, depth: int):
        self.tree = tree
        self.a = a
        self.b = b
        self.depth = depth
        self.interval = (tree.leaf_start(a), tree.leaf_start(b))

    def __repr__(self) -> str:
        return f"PartitionNode({self.interval}, depth={self.depth})"

    def __len__(self) -> int:
        return self.interval[1] - self.interval[0]

    @property
    def is_leaf(self) -> bool:
        return self.b - self.a == 1

    @cached_property
    def children(self) -> tuple[PartitionNode, ...]:
        if self.is_leaf:
            return ()
        out = []
        a = self.a
        for size in _split(self.b - self.a, self.tree.B):
            out.append(PartitionNode(self.tree, a, a + size, self.depth + 1))
            a += size
        return tuple(out)

    def iter_nodes(self):
        stack = [self]
        while stack:
            v = stack.pop()
            yield v
            stack.extend(reversed(v.children))


def build_tree(n: int, B: int, leaf_cap: int) -> PartitionNode:
    return PartitionTree(n, B, leaf_cap).root


def leaf_profile_exact(x: bytes, y: bytes, lo: int, hi: int, K: int, cap: float) -> np.ndarray:
    """Exact ED(X[lo..hi), Y[lo+s..hi+s)) per shift, clamped windows, capped at ``cap``."""
    n = len(y)
    if hi - lo == 1:
        pos = lo + np.arange(-K, K + 1)
        inside = (pos >= 0) & (pos < n)
        ya = np.frombuffer(y, dtype=np.uint8)
        out = np.ones(2 * K + 1, dtype=np.float64)
        out[inside] = ya[pos[inside]] != x[lo]
        return np.minimum(out, cap)
    out = np.empty(2 * K + 1, dtype=np.float64)
    xs = x[lo:hi]
    for s in range(-K, K + 1):
        a, b = max(lo + s, 0), min(hi + s, n)
        ys = y[a:b] if b > a else b""
        out[s + K] = min(edit_distance(xs, ys), cap)
    return out


def tree_distance_profile(X: Text, Y: Text, v: PartitionNode, K: int, capped: bool = True) -> ShiftProfile:
    """TD_{v,s} for every s in -K..K, bottom-up, one DP per (leaf, shift)."""
    x, y = as_bytes(X), as_bytes(Y)
    cap = float(K) if capped else np.inf
    vals = _td(x, y, v, K, cap)
    return ShiftProfile(K, vals)


def _td(x: bytes, y: bytes, v: PartitionNode, K: int, cap: float) -> np.ndarray:
    if v.is_leaf:
        return leaf_profile_exact(x, y, v.interval[0], v.interval[1], K, cap)
    total = np.zeros(2 * K + 1, dtype=np.float64)
    for c in v.children:
        total += combine_values(_td(x, y, c, K, cap))
    return np.minimum(total, cap)


def tree_distance_exact(X: Text, Y: Text, root: PartitionNode, K: int, capped: bool = True) -> float:
    """TD^{<=K}_{root,0}; with ``capped=False`` and K >= n this is the uncapped TD."""
    return tree_distance_profile(X, Y, root, K, capped)[0]
