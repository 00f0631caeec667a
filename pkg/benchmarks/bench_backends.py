"""Benchmark the crossing-count backends against each other.

Times the compiled extension and the NumPy fallback on the same batch of
random lines against a snowflake polygon, checks that their outputs are
bit-identical, and prints throughput plus speedup.

Usage: python benchmarks/bench_backends.py [--order N] [--lines M] [--repeats R]
"""

import argparse
import math
import time

import numpy as np

from fibsnow import turtle
from fibsnow.kernels import available_backends


def make_inputs(order, n_lines, seed=0):
    path = turtle.snowflake_path(order)
    xs = np.ascontiguousarray(path.vertices[:, 0], dtype=np.float64)
    ys = np.ascontiguousarray(path.vertices[:, 1], dtype=np.float64)
    rng = np.random.default_rng(seed)
    theta = rng.uniform(0.0, math.pi, n_lines)
    (x0, y0), (x1, y1) = turtle.bounding_box(path)
    half = math.hypot(x1 - x0, y1 - y0) / 2.0
    rho = rng.uniform(-half, half, n_lines)
    return xs, ys, np.cos(theta), np.sin(theta), rho


def bench(func, args, repeats):
    best = math.inf
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = func(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=5)
    parser.add_argument("--lines", type=int, default=20_000)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    xs, ys, ct, st, rho = make_inputs(args.order, args.lines)
    tol = 1e-9
    inputs = (xs, ys, ct, st, rho, tol)
    cells = args.lines * xs.size

    impls = available_backends()
    print(f"order {args.order}: {xs.size} vertices x {args.lines} lines "
          f"({cells / 1e6:.1f}M line-vertex pairs), best of {args.repeats}")

    timings = {}
    results = {}
    for name in sorted(impls):
        elapsed, out = bench(impls[name], inputs, args.repeats)
        timings[name] = elapsed
        results[name] = out
        print(f"  {name:<8} {elapsed * 1e3:9.1f} ms   "
              f"{args.lines / elapsed / 1e3:8.1f} klines/s   "
              f"{cells / elapsed / 1e6:8.0f} Mpairs/s")

    if len(results) == 2:
        identical = bool((results["python"] == results["cython"]).all())
        print(f"  outputs bit-identical: {identical}")
        print(f"  speedup (cython over python): "
              f"{timings['python'] / timings['cython']:.1f}x")
        if not identical:
            raise SystemExit("backend outputs diverged")
    else:
        print("  compiled backend not built; nothing to compare")


if __name__ == "__main__":
    main()
