#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Two layers:

  * micro: the raw kernels (`mul_terms`, `cauchy_mul`) on workloads shaped
    like real family polynomials (dense integer coefficient maps);
  * end-to-end (--e2e): the same CLI verification workload run in
    subprocesses with CHEBIDENT_KERNELS forced to each backend.

Usage:
    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py --degree 96 --order 48 --repeat 7 --e2e
"""

from __future__ import annotations

import argparse
import os
import statistics
import subprocess
import sys
import time

from chebident import _kernels_py

try:
    from chebident import _kernels_c
except ImportError:
    _kernels_c = None


def dense_poly(degree: int, seed: int) -> dict:
    # deterministic integer coefficients with the parity structure of U_n
    return {e: (seed + 3) * (e + 1) + 7 for e in range(degree % 2, degree + 1, 2)}


def series_coeffs(order: int) -> list:
    return [dense_poly(m, m) for m in range(order + 1)]


def best_of(repeat: int, fn, *args) -> float:
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


def bench_micro(degree: int, order: int, repeat: int) -> list[tuple[str, float, float]]:
    a, b = dense_poly(degree, 1), dense_poly(degree, 2)
    sa, sb = series_coeffs(order), series_coeffs(order)

    def mul_many(impl):
        for _ in range(50):
            impl.mul_terms(a, b)

    def cauchy_once(impl):
        impl.cauchy_mul(sa, sb, order)

    rows = []
    for name, fn in (
        (f"mul_terms (deg {degree}, x50)", mul_many),
        (f"cauchy_mul (order {order})", cauchy_once),
    ):
        py = best_of(repeat, fn, _kernels_py)
        cc = best_of(repeat, fn, _kernels_c) if _kernels_c else float("nan")
        rows.append((name, py, cc))
    return rows


def bench_e2e(repeat: int) -> list[tuple[str, float, float]]:
    workloads = [
        (
            "verify thm7 --n-max 12 --N-max 4",
            ["verify", "thm7", "--n-max", "12", "--N-max", "4"],
        ),
        (
            "defining-relation --N-max 6 --order 40",
            ["defining-relation", "--N-max", "6", "--order", "40"],
        ),
    ]
    rows = []
    for label, args in workloads:
        timings = {}
        for backend in ("python", "c"):
            if backend == "c" and _kernels_c is None:
                timings[backend] = float("nan")
                continue
            env = dict(os.environ, CHEBIDENT_KERNELS=backend)
            samples = []
            for _ in range(repeat):
                t0 = time.perf_counter()
                subprocess.run(
                    [sys.executable, "-m", "chebident.cli", *args],
                    check=True,
                    capture_output=True,
                    env=env,
                )
                samples.append(time.perf_counter() - t0)
            timings[backend] = statistics.median(samples)
        rows.append((label, timings["python"], timings["c"]))
    return rows


def print_table(title: str, rows: list[tuple[str, float, float]]) -> None:
    print(f"\n{title}")
    print(f"{'workload':<42} {'python':>10} {'compiled':>10} {'speedup':>8}")
    for name, py, cc in rows:
        if cc != cc:  # NaN: extension missing
            print(f"{name:<42} {py * 1000:>8.2f}ms {'n/a':>10} {'-':>8}")
        else:
            print(f"{name:<42} {py * 1000:>8.2f}ms {cc * 1000:>8.2f}ms {py / cc:>7.2f}x")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--degree", type=int, default=64, help="polynomial degree for mul_terms")
    parser.add_argument("--order", type=int, default=32, help="series order for cauchy_mul")
    parser.add_argument("--repeat", type=int, default=5, help="repetitions, best/median kept")
    parser.add_argument("--e2e", action="store_true", help="also time CLI workloads per backend")
    args = parser.parse_args()

    if _kernels_c is None:
        print("note: compiled kernels not built; timing the pure-Python path only")

    print_table("kernel micro-benchmarks (best of runs)", bench_micro(args.degree, args.order, args.repeat))
    if args.e2e:
        print_table("end-to-end CLI workloads (median, subprocess per backend)", bench_e2e(args.repeat))


if __name__ == "__main__":
    main()
