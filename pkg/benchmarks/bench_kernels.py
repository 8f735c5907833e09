"""Benchmark the compiled kernels against the pure-numpy fallback.

Times the three hot paths on realistic shapes: the measurement-entropy and
dephasing-gap grids at the optimizer's 64x128 resolution, and the batch
closed forms at Monte Carlo scale.

    python benchmarks/bench_kernels.py [--repeats N]
"""
import argparse
import time

import numpy as np

from discord_lab import _kernels_py
from discord_lab._optimize import direction_grid

try:
    from discord_lab import _kernels_cy
except ImportError:
    _kernels_cy = None


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=7)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    a = rng.uniform(-0.3, 0.3, 3)
    b = rng.uniform(-0.3, 0.3, 3)
    t = rng.uniform(-0.5, 0.5, (3, 3))
    _, dirs = direction_grid(64, 128)
    triples = rng.uniform(-1, 1, (1_000_000, 3)) / 3.0

    cases = [
        ("measured_entropy_grid (8192 dirs)",
         lambda k: k.measured_entropy_grid(a, b, t, dirs)),
        ("dephased_gap_grid (8192 dirs)",
         lambda k: k.dephased_gap_grid(a, t, dirs)),
        ("bd_measures (10^6 states)",
         lambda k: k.bd_measures(triples)),
    ]

    print(f"{'kernel':42s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, call in cases:
        t_py = best_of(lambda: call(_kernels_py), args.repeats)
        if _kernels_cy is None:
            print(f"{name:42s} {t_py * 1e3:9.2f}ms {'n/a':>10s} {'n/a':>8s}")
            continue
        t_cy = best_of(lambda: call(_kernels_cy), args.repeats)
        ref = call(_kernels_py)
        dev = float(np.max(np.abs(call(_kernels_cy) - ref)))
        print(
            f"{name:42s} {t_py * 1e3:9.2f}ms {t_cy * 1e3:9.2f}ms "
            f"{t_py / t_cy:7.1f}x   (max dev {dev:.1e})"
        )


if __name__ == "__main__":
    main()
