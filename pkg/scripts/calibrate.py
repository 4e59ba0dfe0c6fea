"""Measure Delta_root / K on held-out seeds to place the desk gap threshold.

Seeds here start at 5_000_000 and are never reused by the test-suite.
Usage: python scripts/calibrate.py [trials]
"""

from __future__ import annotations

import sys

import numpy as np

from subed.exact import capped_edit_distance
from subed.gap import decide_gap
from subed.workbench.generators import GeneratorSpec, generate

BASE = 5_000_000


def main(trials: int) -> None:
    close_max, far_min = 0.0, 1.0
    for n in (100_000, 1 << 20):
        for k in (4, 8, 16):
            close, far = [], []
            for t in range(trials):
                seed = BASE + 1000 * k + t
                X, Y = generate(GeneratorSpec("planted_edits", n, edits=k, seed=seed))
                r = decide_gap(X, Y, k, 4, "desk", theta=1.0, seed=seed)
                close.append(r.delta_root / r.K)
                X, Y = generate(GeneratorSpec("far_pair", n, seed=seed))
                if capped_edit_distance(X, Y, r.K) < r.K:
                    continue
                r = decide_gap(X, Y, k, 4, "desk", theta=1.0, seed=seed)
                far.append(r.delta_root / r.K)
            close_max = max(close_max, float(np.max(close)))
            far_min = min(far_min, float(np.min(far)))
            print(f"n={n} k={k} K={r.K} close: median {np.median(close):.3f} max {np.max(close):.3f}"
                  f" | far: min {np.min(far):.3f} median {np.median(far):.3f}", flush=True)
    print(f"largest close ratio {close_max:.3f}, smallest far ratio {far_min:.3f}, "
          f"midpoint {(close_max + far_min) / 2:.3f}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 20)
