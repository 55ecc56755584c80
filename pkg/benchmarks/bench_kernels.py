#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Times the three hot kernels (Hermitian eigensolve, rotated-eigenvalue
scan, triangular recurrence) and two end-to-end consumers (numerical
radius, one harness case). Run after building the extension:

    python3 setup.py build_ext --inplace
    python3 benchmarks/bench_kernels.py [--repeats 200]
"""

import argparse
import time

import numpy as np

from accretive_lab import _kernels
from accretive_lab.radius import numerical_radius
from accretive_lab.verify import SuiteConfig, run_trial


def _time(fn, repeats):
    best = float("inf")
    for _ in range(3):
        start = time.perf_counter()
        for _ in range(repeats):
            fn()
        best = min(best, (time.perf_counter() - start) / repeats)
    return best


def _inputs(n, seed=0):
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    h = 0.5 * (g + g.conj().T)
    t = np.triu(g)
    np.fill_diagonal(t, np.arange(1, n + 1) + 0.1j)
    thetas = np.linspace(0.0, 2.0 * np.pi, 720, endpoint=False)
    return g, h, t, thetas


def raw_kernel_benchmarks(n):
    """Raw backend-vs-backend comparisons (no size dispatch)."""
    g, h, t, thetas = _inputs(n)
    phases = np.ascontiguousarray(np.exp(1j * thetas))
    fdiag = np.ascontiguousarray(np.exp(np.diag(t)))
    h = np.ascontiguousarray(h)
    g = np.ascontiguousarray(g)
    t = np.ascontiguousarray(t)
    return {
        f"eigh_values        n={n}": lambda mod: mod.eigh_values(h),
        f"eigh_factor        n={n}": lambda mod: mod.eigh_factor(h),
        f"rotated_scan x720  n={n}": lambda mod: mod.rotated_max_eig(g, phases),
        f"parlett            n={n}": lambda mod: mod.parlett_recurrence(t, fdiag),
    }


def end_to_end_benchmarks(n):
    """Through the dispatching wrappers (compiled = hybrid above the crossover)."""
    g, _, _, _ = _inputs(n)
    cfg = SuiteConfig(cases=("thm_nabla_vs_sigma",), trials=1, dim_min=n, dim_max=n)
    return {
        f"numerical_radius   n={n}": lambda _: numerical_radius(g),
        f"harness trial      n={n}": lambda _: run_trial("thm_nabla_vs_sigma", cfg, 0),
    }


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=200)
    parser.add_argument("--dims", type=int, nargs="+", default=[3, 5, 8, 16])
    args = parser.parse_args()

    if "compiled" not in _kernels.available_backends():
        print("compiled backend not built; run: python3 setup.py build_ext --inplace")
        return

    print(
        "wrapper dispatch: jacobi for n <= "
        f"{_kernels.JACOBI_MAX_DIM} (eigh) / {_kernels.SCAN_MAX_DIM} (scan), "
        "lapack above; parlett always compiled"
    )
    print(f"{'kernel (raw backends)':<26} {'python':>12} {'compiled':>12} {'speedup':>9}")
    for n in args.dims:
        for label, fn in raw_kernel_benchmarks(n).items():
            timings = {
                name: _time(lambda m=_kernels._BACKENDS[name]: fn(m), args.repeats)
                for name in ("python", "compiled")
            }
            print(
                f"{label:<26} {timings['python'] * 1e6:>10.1f}us "
                f"{timings['compiled'] * 1e6:>10.1f}us "
                f"{timings['python'] / timings['compiled']:>8.1f}x"
            )
    print()
    print(f"{'end to end (dispatched)':<26} {'python':>12} {'compiled':>12} {'speedup':>9}")
    for n in args.dims:
        for label, fn in end_to_end_benchmarks(n).items():
            repeats = max(5, args.repeats // 40)
            timings = {}
            for backend in ("python", "compiled"):
                _kernels.use_backend(backend)
                timings[backend] = _time(lambda: fn(None), repeats)
            _kernels.use_backend(_kernels._default_backend())
            print(
                f"{label:<26} {timings['python'] * 1e6:>10.1f}us "
                f"{timings['compiled'] * 1e6:>10.1f}us "
                f"{timings['python'] / timings['compiled']:>8.1f}x"
            )


if __name__ == "__main__":
    main()
