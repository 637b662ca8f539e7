#!/usr/bin/env python3
"""Benchmark the sign-sum enumeration kernel: compiled extension vs numpy
fallback.

Run: python3 benchmarks/bench_signdist.py [n_max]

Both paths produce bitwise-identical output; the benchmark verifies that
before timing.
"""

import sys
import time

import numpy as np

import rispaces._signdist_py as fallback

try:
    import rispaces._signdist as compiled
except ImportError:
    compiled = None


def timeit(fn, coeffs, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(coeffs)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 22
    rng = np.random.default_rng(0)
    print(f"{'n':>3} {'fallback (s)':>14} {'compiled (s)':>14} {'speedup':>8}")
    for n in range(14, n_max + 1, 2):
        coeffs = rng.normal(size=n)
        t_py, out_py = timeit(fallback.enumerate_signed_sums, coeffs)
        if compiled is None:
            print(f"{n:>3} {t_py:>14.4f} {'(not built)':>14}")
            continue
        t_c, out_c = timeit(compiled.enumerate_signed_sums, coeffs)
        assert np.array_equal(np.sort(out_py), np.sort(out_c)), "kernel mismatch"
        print(f"{n:>3} {t_py:>14.4f} {t_c:>14.4f} {t_py / t_c:>8.2f}x")


if __name__ == "__main__":
    main()
