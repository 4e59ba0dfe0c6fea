from __future__ import annotations

import math

import numpy as np
import pytest

from subed.precision import (
    GRID,
    PrecisionParams,
    conditional_inverse_mean_check,
    draw_replicas,
    recover_sum,
    recover_sums,
    sample_precision,
)


def test_lambda_value():
    assert PrecisionParams(0.1, 0.01).lam == 3685


def test_bad_params():
    with pytest.raises(ValueError):
        PrecisionParams(0.0, 0.1)
    with pytest.raises(ValueError):
        PrecisionParams(0.1, 1.0)


def test_replicas_on_grid(rng):
    r = draw_replicas(50, 10, rng)
    assert r.shape == (10, 50)
    assert np.all(r >= GRID)
    assert np.allclose(r / GRID, np.round(r / GRID))


def test_sample_u_is_min_capped(rng):
    s = sample_precision(PrecisionParams(0.5, 0.1), rng)
    assert s.u == min(1.0, s.replicas.min())


def test_zero_terms():
    assert recover_sum([], []) == 0.0


def test_all_zero_estimates(rng):
    reps = draw_replicas(20, 5, rng)
    assert recover_sums(np.zeros((5, 3)), reps).tolist() == [0.0, 0.0, 0.0]


def test_mismatched_lengths(rng):
    with pytest.raises(ValueError):
        recover_sum([1.0, 2.0], [sample_precision(PrecisionParams(0.5, 0.1), rng)])


def test_recovery_close_to_sum(rng):
    params = PrecisionParams(0.2, 0.01)
    A = rng.random(100)
    samples = [sample_precision(params, rng) for _ in A]
    est = recover_sum(A, samples)
    assert A.sum() / 1.2 <= est <= 1.2 * A.sum()


def test_columns_are_independent_sums(rng):
    reps = draw_replicas(200, 30, rng)
    A = rng.random((30, 4))
    got = recover_sums(A, reps)
    for t in range(4):
        assert got[t] == pytest.approx(recover_sums(A[:, t], reps)[0])


def test_conditional_mean_finite(rng):
    params = PrecisionParams(0.5, 0.1)
    m = conditional_inverse_mean_check(params, 100, 10000, rng)
    assert 0 < m <= 10 * params.lam * math.log(params.lam * 100)
