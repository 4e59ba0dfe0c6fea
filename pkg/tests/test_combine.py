from __future__ import annotations

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from subed.combine import combine, combine_bruteforce, combine_values
from subed.exact import ShiftProfile


def test_worked_example():
    assert combine_values([5, 0, 3, 7, 1]).tolist() == [2, 0, 2, 3, 1]


def test_profile_wrapper():
    out = combine(ShiftProfile(1, np.array([4.0, 0.0, 4.0])))
    assert out.K == 1
    assert out.tolist() == [2.0, 0.0, 2.0]


@given(st.lists(st.integers(0, 100), min_size=1, max_size=50))
def test_equals_bruteforce(a):
    assert np.array_equal(combine_values(a), combine_bruteforce(a))


@given(st.lists(st.floats(0, 100, allow_nan=False), min_size=1, max_size=50))
def test_lipschitz_and_below_input(a):
    b = combine_values(a)
    assert np.all(b <= np.asarray(a))
    assert np.all(np.abs(np.diff(b)) <= 2 + 1e-9)
