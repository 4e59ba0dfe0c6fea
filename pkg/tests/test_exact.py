from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import ed_naive, rand_bytes
from subed.exact import (
    alignment_cost,
    capped_edit_distance,
    ed_many_shifts_2approx,
    edit_distance,
    exact_edit_distance,
    lce,
    many_offsets_2approx,
    optimal_alignment,
)

text = st.binary(max_size=30).map(lambda b: bytes(97 + (c % 3) for c in b))


@pytest.mark.parametrize(
    "x,y,d",
    [("", "abc", 3), ("abc", "abc", 0), ("ab", "ba", 2), ("kitten", "sitting", 3), ("", "", 0)],
)
def test_edit_distance_examples(x, y, d):
    assert edit_distance(x, y) == d


def test_ab_ba_has_no_single_edit():
    # every string one edit away from "ab" over {a, b}
    alpha = b"ab"
    one = set()
    x = b"ab"
    for i in range(3):
        for c in alpha:
            one.add(x[:i] + bytes([c]) + x[i:])
    for i in range(2):
        one.add(x[:i] + x[i + 1 :])
        for c in alpha:
            one.add(x[:i] + bytes([c]) + x[i + 1 :])
    assert b"ba" not in one


@given(text, text)
def test_edit_distance_matches_naive(x, y):
    assert edit_distance(x, y) == ed_naive(x, y)


@given(text, text, st.integers(1, 40))
def test_capped_is_min_of_exact(x, y, K):
    assert capped_edit_distance(x, y, K) == min(ed_naive(x, y), K)


def test_capped_examples():
    assert capped_edit_distance("abcde", "abcde", 5) == 0
    assert capped_edit_distance("aaaa", "bbbb", 2) == 2


def test_capped_random_larger(rng):
    for _ in range(60):
        n, m = rng.integers(0, 300, size=2)
        x, y = rand_bytes(rng, int(n), 2), rand_bytes(rng, int(m), 2)
        K = int(rng.integers(1, 41))
        assert capped_edit_distance(x, y, K) == min(edit_distance(x, y), K)


def test_exact_edit_distance_doubling(rng):
    x = rand_bytes(rng, 500)
    y = bytearray(x)
    for p in rng.integers(0, 490, size=20):
        y[int(p)] = ord("z")
    assert exact_edit_distance(x, bytes(y)) == edit_distance(x, bytes(y))


@given(text, text)
def test_alignment_certificate(x, y):
    A = optimal_alignment(x, y)
    assert A.map[0] == 0
    if x:
        assert A.map[-1] == len(y)
    assert all(a <= b for a, b in zip(A.map, A.map[1:]))
    assert alignment_cost(x, y, A) == ed_naive(x, y)


def test_alignment_identity():
    assert optimal_alignment("abcd", "abcd").map == (0, 1, 2, 3, 4)


def test_alignment_degenerate_empty_x():
    A = optimal_alignment("", "xyz")
    assert A.map == (0,)
    assert alignment_cost("", "xyz", A) == 3


def test_alignment_ab_b():
    A = optimal_alignment("ab", "b")
    assert alignment_cost("ab", "b", A) == 1


@settings(max_examples=200)
@given(st.integers(1, 30), st.data())
def test_alignment_stretch(n, data):
    x = data.draw(st.binary(min_size=n, max_size=n).map(lambda b: bytes(97 + (c % 2) for c in b)))
    y = data.draw(st.binary(min_size=n, max_size=n).map(lambda b: bytes(97 + (c % 2) for c in b)))
    A = optimal_alignment(x, y)
    d = ed_naive(x, y)
    assert all(abs(i - a) <= d / 2 for i, a in enumerate(A.map))


def test_triangle_inequality(rng):
    for _ in range(100):
        x, y, z = (rand_bytes(rng, int(rng.integers(0, 25)), 3) for _ in range(3))
        assert edit_distance(x, z) <= edit_distance(x, y) + edit_distance(y, z)


@pytest.mark.parametrize(
    "x,i,y,j,ell", [("aaab", 0, "aaac", 0, 3), ("ab", 1, "ba", 0, 1), ("abc", 3, "abc", 0, 0)]
)
def test_lce_examples(x, i, y, j, ell):
    assert lce(x.encode(), i, y.encode(), j) == ell


def test_lce_long_and_counted():
    x = b"a" * 1000 + b"b"
    y = b"a" * 1000 + b"c"
    ctr = [0]
    assert lce(x, 0, y, 0, ctr) == 1000
    assert ctr[0] == 2 * 1001


def test_many_shifts_exact_match():
    prof = ed_many_shifts_2approx("abab", "abababab", 2)
    assert prof[0] == 0


def test_many_shifts_precondition():
    with pytest.raises(ValueError):
        ed_many_shifts_2approx("ab", "abc", 1)


@settings(max_examples=150)
@given(st.integers(1, 6), st.integers(0, 25), st.data())
def test_many_shifts_sandwich(K, m, data):
    alph = st.binary(min_size=m, max_size=m).map(lambda b: bytes(97 + (c % 2) for c in b))
    x = data.draw(alph)
    y = data.draw(st.binary(min_size=m + 2 * K, max_size=m + 2 * K).map(lambda b: bytes(97 + (c % 2) for c in b)))
    prof = ed_many_shifts_2approx(x, y, K)
    for s in range(-K, K + 1):
        true = min(ed_naive(x, y[K + s : K + s + m]), K)
        assert prof[s] <= true <= min(2 * prof[s], K)


def test_truncated_windows_sandwich(rng):
    # negative offsets stand for windows cut short at the front of the text
    for _ in range(200):
        m = int(rng.integers(1, 20))
        W = int(rng.integers(0, 5))
        neg = int(rng.integers(0, 6))
        cap = int(rng.integers(1, 9))
        x = rand_bytes(rng, m, 2)
        y = rand_bytes(rng, m + W, 2)
        out = many_offsets_2approx(x, y, W, cap, neg=neg)
        for t in range(-neg, W + 1):
            window = y[t : t + m] if t >= 0 else y[: max(m + t, 0)]
            true = min(ed_naive(x, window), cap)
            e = out[t + neg]
            assert e <= true <= min(2 * e, cap), (x, y, t)


def test_many_shifts_frozen_values():
    # values computed by hand from the min-over-starts table
    prof = ed_many_shifts_2approx(b"abc", b"xxabcxx", 2)
    assert list(prof.values) == [2, 1, 0, 1, 2]
    assert list(itertools.islice(prof.shifts(), 5)) == [-2, -1, 0, 1, 2]


def test_many_shifts_reads_are_counted(rng):
    x = rand_bytes(rng, 200)
    y = rand_bytes(rng, 4) + x + rand_bytes(rng, 4)
    ctr = [0]
    ed_many_shifts_2approx(x, y, 4, ctr)
    assert ctr[0] >= 2 * len(x)


def test_capped_zero_cap():
    assert capped_edit_distance("abc", "xyz", 0) == 0
    assert np.all(many_offsets_2approx("ab", "abcd", 2, 0) == 0)
