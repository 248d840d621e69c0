"""Benchmark the rolling-std and lag-1 kernels on both backends.

Runs each kernel over a synthetic minute-cadence voltage series at several
sizes and prints a table comparing the compiled path against the pure-numpy
fallback. The backend is fixed per process via ENOSE_NUMBA, so this script
re-executes itself once per backend.

Usage: python3 benchmarks/bench_kernels.py [--sizes 5040,50400,504000]
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import subprocess
import sys
import time

import numpy as np

WINDOW = 120
REPEATS = 7


def make_series(n: int) -> np.ndarray:
    rng = np.random.default_rng(20250812)
    t = np.linspace(0.0, 1.0, n)
    return 0.7 + 1.2 / (1.0 + np.exp(-9.0 * (t - 0.45))) + rng.normal(0.0, 0.02, n)


def time_kernels(sizes: list[int]) -> dict:
    from enose._kernels import active_backend, lag1_terms, rolling_std

    results = {"backend": active_backend(), "timings": {}}
    for n in sizes:
        values = make_series(n)
        rolling_std(values, WINDOW)  # warm-up; triggers any compilation
        lag1_terms(values)

        rolled = []
        for _ in range(REPEATS):
            start = time.perf_counter()
            rolling_std(values, WINDOW)
            rolled.append(time.perf_counter() - start)

        lagged = []
        for _ in range(REPEATS):
            start = time.perf_counter()
            lag1_terms(values)
            lagged.append(time.perf_counter() - start)

        results["timings"][n] = {
            "rolling_std_ms": statistics.median(rolled) * 1e3,
            "lag1_terms_ms": statistics.median(lagged) * 1e3,
        }
    return results


def run_child(flag: str, sizes: list[int]) -> dict:
    env = dict(os.environ, ENOSE_NUMBA=flag)
    out = subprocess.run(
        [sys.executable, __file__, "--child", "--sizes",
         ",".join(str(s) for s in sizes)],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(out.stdout)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="5040,50400,504000",
                        help="comma-separated series lengths")
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if args.child:
        print(json.dumps(time_kernels(sizes)))
        return 0

    numpy_run = run_child("0", sizes)
    numba_run = run_child("1", sizes)
    if numba_run["backend"] != "numba":
        print("numba unavailable; both runs used the numpy fallback",
              file=sys.stderr)

    print(f"{'n':>8}  {'kernel':<12} {'numpy ms':>10} "
          f"{numba_run['backend'] + ' ms':>10} {'speedup':>8}")
    for n in sizes:
        for kernel in ("rolling_std_ms", "lag1_terms_ms"):
            base = numpy_run["timings"][str(n)][kernel]
            fast = numba_run["timings"][str(n)][kernel]
            name = kernel.removesuffix("_ms")
            print(f"{n:>8}  {name:<12} {base:>10.3f} {fast:>10.3f} "
                  f"{base / fast:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
