#!/usr/bin/env python3
"""Times the point-classification kernels, compiled against pure Python.

Both backends share one packed-table contract and must return identical
region indices for identical inputs; this benchmark re-checks that on its
random sample before timing anything.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--points N] [--repeats K]

The batch workload classifies N points against the default layout and a
merged layout in one call.  The scalar workload calls the one-point kernel
in a Python loop (the dwell engine's access pattern) on a smaller sample,
since the pure-Python scalar path is orders of magnitude slower."""

from __future__ import annotations

import argparse
import time

import numpy as np

from slicetype.corpus import default_model
from slicetype.geometry import default_layout
from slicetype.kernels import available_backends
from slicetype.merging import plan_merge


def best_of(repeats: int, fn) -> float:
    """Shortest wall time of several runs, in seconds."""
    times = []
    for _ in range(repeats):
        started = time.perf_counter()
        fn()
        times.append(time.perf_counter() - started)
    return min(times)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", type=int, default=200_000,
                        help="batch sample size (default 200000)")
    parser.add_argument("--scalar-points", type=int, default=20_000,
                        help="scalar-loop sample size (default 20000)")
    parser.add_argument("--repeats", type=int, default=5,
                        help="take the best of this many runs (default 5)")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    model = default_model()
    base = default_layout()
    merged = plan_merge(model, base, "the", "q").layout

    rng = np.random.default_rng(args.seed)
    xs = rng.uniform(-1.1, 1.1, args.points)
    ys = rng.uniform(-1.1, 1.1, args.points)

    backends = available_backends()
    print(f"backends found: {', '.join(backends)}")
    print(f"batch: {args.points} points x 2 layouts, "
          f"scalar: {args.scalar_points} points x 2 layouts, "
          f"best of {args.repeats}\n")

    layouts = [("default", base), ("merged", merged)]
    tables = {name: layout.packed() for name, layout in layouts}

    # refuse to time backends that disagree
    for name, layout in layouts:
        sec_geom, sec_owner, rect_geom, rect_owner = tables[name]
        results = {
            backend: module.classify_batch(
                xs, ys, sec_geom, sec_owner, rect_geom, rect_owner
            )
            for backend, module in backends.items()
        }
        first = next(iter(results.values()))
        for backend, indices in results.items():
            if not np.array_equal(indices, first):
                raise SystemExit(
                    f"backend {backend!r} disagrees on the {name} layout"
                )
    print("backends agree on every sampled point\n")

    header = f"{'backend':>10s} {'batch Mpts/s':>14s} {'scalar kpts/s':>14s}"
    print(header)
    print("-" * len(header))

    scalar_n = args.scalar_points
    reference: dict[str, float] = {}
    for backend, module in backends.items():
        def run_batch(module=module):
            for name, _ in layouts:
                sec_geom, sec_owner, rect_geom, rect_owner = tables[name]
                module.classify_batch(
                    xs, ys, sec_geom, sec_owner, rect_geom, rect_owner
                )

        def run_scalar(module=module):
            for name, _ in layouts:
                sec_geom, sec_owner, rect_geom, rect_owner = tables[name]
                classify = module.classify_point
                for i in range(scalar_n):
                    classify(xs[i], ys[i], sec_geom, sec_owner,
                             rect_geom, rect_owner)

        batch_s = best_of(args.repeats, run_batch)
        scalar_s = best_of(args.repeats, run_scalar)
        batch_rate = 2 * args.points / batch_s / 1e6
        scalar_rate = 2 * scalar_n / scalar_s / 1e3
        reference[backend] = batch_s
        print(f"{backend:>10s} {batch_rate:>14.1f} {scalar_rate:>14.1f}")

    if {"python", "compiled"} <= reference.keys():
        speedup = reference["python"] / reference["compiled"]
        print(f"\ncompiled batch speedup over pure Python: {speedup:.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
