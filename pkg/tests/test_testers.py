from __future__ import annotations

import numpy as np
import pytest

from oracles import hd, rand_bytes
from subed.strings import StringOracle
from subed.testers import equality_test, match_offsets, matching_test, periodicity_test, sample_count


def test_sample_count():
    assert sample_count(100, 0.1, np.exp(-2)) == 20


def test_equal_strings_always_close(rng):
    x = rand_bytes(rng, 500)
    for _ in range(50):
        assert equality_test(x, x, 0.01, 0.1, rng).close


def test_all_different_is_far(rng):
    res = equality_test(b"a" * 100, b"b" * 100, 0.01, 0.1, rng)
    assert not res.close and res.witness is not None


def test_far_witness_is_real(rng):
    for _ in range(300):
        x = rand_bytes(rng, 50, 2)
        y = bytearray(x)
        y[int(rng.integers(50))] ^= 3
        res = equality_test(x, bytes(y), 0.2, 0.1, rng)
        if not res.close:
            assert x[res.witness] != y[res.witness]


def test_equality_length_mismatch(rng):
    with pytest.raises(ValueError):
        equality_test(b"ab", b"abc", 1.0, 0.1, rng)


def test_equality_counts_reads(rng):
    X, Y = StringOracle(b"a" * 1000), StringOracle(b"a" * 1000)
    equality_test(X, Y, 0.01, 0.1, rng)
    m = sample_count(1000, 0.01, 0.1)
    assert X.reads == Y.reads == m


def test_periodicity_exact():
    res = periodicity_test(b"ab" * 50, 4, 1.0, 0.01, np.random.default_rng(0))
    assert res.close and res.witness.pattern == b"ab"


def test_periodicity_aperiodic_prefix_is_far():
    res = periodicity_test(b"abcdefgh" + b"a" * 50, 4, 1.0, 0.01, np.random.default_rng(0))
    assert not res.close


def test_periodicity_precondition(rng):
    with pytest.raises(ValueError):
        periodicity_test(b"abc", 2, 1.0, 0.1, rng)


@pytest.mark.parametrize("s_star", [-4, -1, 0, 3, 4])
def test_matching_planted_shift(rng, s_star):
    K = 4
    x = rand_bytes(rng, 120)
    y = rand_bytes(rng, K + s_star) + x + rand_bytes(rng, K - s_star)
    res = matching_test(x, y, K, 0.5, 0.01, rng)
    assert res.close and res.witness == s_star


def test_matching_periodic_degenerate(rng):
    K = 3
    x = (b"abc" * 100)[:90]
    y = (b"abc" * 100)[: 90 + 2 * K]
    res = matching_test(x, y, K, 0.5, 0.01, rng)
    assert res.close
    s = res.witness
    assert hd(x, y[K + s : K + s + len(x)]) == 0


def test_matching_independent_random_is_far(rng):
    far = 0
    for _ in range(50):
        x, y = rand_bytes(rng, 80), rand_bytes(rng, 88)
        far += not matching_test(x, y, 4, 0.5, 0.01, rng).close
    assert far >= 48


def test_matching_precondition(rng):
    with pytest.raises(ValueError):
        matching_test(b"a" * 10, b"a" * 11, 1, 1.0, 0.1, rng)


def test_leading_mismatch_in_periodic_region(rng):
    # X and Y agree with a period up to a late break, so the candidate comes from step 3
    K = 4
    P = b"abc"
    for s_star in range(-K, K + 1):
        base = (P * 200)[:400] + rand_bytes(rng, 200)
        x = base[K + s_star : K + s_star + 400]
        y = base[:408]
        res = matching_test(x, y, K, 1.0, 0.01, rng)
        assert res.close
        assert x == y[K + res.witness : K + res.witness + 400]


def test_match_offsets_narrow_window(rng):
    x = rand_bytes(rng, 64)
    y = x + rand_bytes(rng, 2)
    res = match_offsets(StringOracle(x), StringOracle(y), 2, 4, 0.5, 0.01, rng)
    assert res.close and res.witness == 0


def test_step3_candidates_against_oracle(rng):
    # periodic stretch of random length, then noise; planted exact shift
    K = 3
    for _ in range(300):
        P = rand_bytes(rng, int(rng.integers(1, 5)), 2)
        s_star = int(rng.integers(-K, K + 1))
        L = int(rng.integers(20, 90))
        base = (P * 100)[:L] + rand_bytes(rng, 60, 2)
        x = base[K + s_star : K + s_star + 60]
        y = base[: 60 + 2 * K]
        res = matching_test(x, y, K, 1.0, 0.001, rng)
        assert res.close
        assert hd(x, y[K + res.witness : K + res.witness + 60]) == 0
