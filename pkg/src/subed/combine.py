"""Slope-2 range minimum over shift profiles.

For a profile A over shifts -K..K this computes
B_s = min_{s'} (A_{s'} + 2|s - s'|) with one sweep in each direction.
"""

from __future__ import annotations

import numpy as np

from .exact import ShiftProfile


def combine_values(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.float64)
    idx = 2.0 * np.arange(len(a))
    # left sweep: min over s' <= s of A_{s'} + 2(s - s')
    left = np.minimum.accumulate(a - idx) + idx
    # right sweep: min over s' >= s of A_{s'} + 2(s' - s)
    right = np.minimum.accumulate((a + idx)[::-1])[::-1] - idx
    # the s' = s term exactly, so float round-off never lifts a value
    return np.minimum(np.minimum(left, right), a)


def combine(A: ShiftProfile) -> ShiftProfile:
    return ShiftProfile(A.K, combine_values(A.values))


def combine_bruteforce(a) -> np.ndarray:
    a = np.asarray(a, dtype=np.float64)
    n = len(a)
    idx = np.arange(n)
    return np.array([np.min(a + 2.0 * np.abs(idx - s)) for s in range(n)])
