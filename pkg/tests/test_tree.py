from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import ed_naive, rand_bytes, td_naive
from subed.tree import PartitionTree, build_tree, tree_distance_exact


def test_root_covers_everything():
    root = build_tree(10, 2, 10)
    assert root.interval == (0, 10)
    assert len(root) == 10


@settings(max_examples=100)
@given(st.integers(1, 300), st.integers(2, 6), st.integers(1, 300))
def test_children_partition_parent(n, B, cap):
    root = PartitionTree(n, B, cap).root
    for v in root.iter_nodes():
        if v.is_leaf:
            assert len(v) >= 1
            continue
        kids = v.children
        assert 2 <= len(kids) <= B
        assert kids[0].interval[0] == v.interval[0]
        assert kids[-1].interval[1] == v.interval[1]
        assert all(a.interval[1] == b.interval[0] for a, b in zip(kids, kids[1:]))


def test_large_tree_shape():
    t = PartitionTree(10**6, 4, 256)
    assert t.leaves == 256
    assert t.depth == 4
    lengths = {len(v) for v in t.root.iter_nodes() if v.is_leaf}
    assert lengths == {3906, 3907}


def test_node_count_matches_walk():
    t = PartitionTree(1000, 3, 100)
    assert t.node_count == sum(1 for _ in t.root.iter_nodes())


def test_bad_parameters():
    with pytest.raises(ValueError):
        PartitionTree(0, 2, 1)
    with pytest.raises(ValueError):
        PartitionTree(5, 1, 5)


def test_identical_strings_have_zero_distance(rng):
    x = rand_bytes(rng, 60)
    assert tree_distance_exact(x, x, build_tree(60, 3, 60), 5) == 0


def test_small_frozen_value():
    # one substitution in a 4-leaf binary tree costs exactly one at every level
    root = build_tree(4, 2, 4)
    assert tree_distance_exact(b"abcd", b"abxd", root, 4, capped=False) == 1


def test_matches_recursive_definition(rng):
    for _ in range(40):
        n = int(rng.integers(1, 25))
        B = int(rng.integers(2, 4))
        K = int(rng.integers(1, 5))
        x, y = rand_bytes(rng, n, 2), rand_bytes(rng, n, 2)
        root = build_tree(n, B, int(rng.integers(1, n + 1)))
        for capped in (True, False):
            assert tree_distance_exact(x, y, root, K, capped) == td_naive(x, y, root, 0, K, capped)


def test_sandwich_small(rng):
    for _ in range(50):
        n = int(rng.integers(1, 40))
        B = int(rng.integers(2, 5))
        x, y = rand_bytes(rng, n, 2), rand_bytes(rng, n, 2)
        root = build_tree(n, B, n)
        td = tree_distance_exact(x, y, root, n, capped=False)
        ed = ed_naive(x, y)
        assert ed <= td <= 2 * B * max(root.tree.depth, 1) * ed
