#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallbacks.

Run twice to see both sides from a cold start:

    python benchmarks/bench_kernels.py            # numba path (default)
    SPLITQUANT_NO_NUMBA=1 python benchmarks/bench_kernels.py

Within one process both implementations are always timed; the env flag only
changes which one the package itself dispatches to.
"""

import time

import numpy as np

from splitquant import kernels


def timeit(fn, *args, repeat=5):
    fn(*args)                      # warm-up (JIT compile / cache touch)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_nearest_codes():
    rng = np.random.default_rng(0)
    t = rng.standard_normal(1_000_000)
    mu, phi, b = float(t.min()), float(t.max()), 8
    step = (phi - mu) / ((1 << b) - 1)
    t_nb = timeit(kernels.nearest_codes, t, mu, step, 1 << b) \
        if kernels.USE_NUMBA else float("nan")
    t_np = timeit(kernels.nearest_codes_numpy, t, mu, step, 1 << b)
    print(f"nearest_codes 1e6 values:  numba {t_nb * 1e3:8.2f} ms   "
          f"numpy {t_np * 1e3:8.2f} ms")
    if kernels.USE_NUMBA:
        a = kernels.nearest_codes(t, mu, step, 1 << b)
        b2 = kernels.nearest_codes_numpy(t, mu, step, 1 << b)
        assert np.array_equal(a, b2), "paths disagree"


def bench_conv2d():
    rng = np.random.default_rng(1)
    x = rng.standard_normal((16, 64, 64))
    w = rng.standard_normal((32, 16, 3, 3))
    t_nb = timeit(kernels.conv2d_direct, x, w, 1, 1) \
        if kernels.USE_NUMBA else float("nan")
    t_np = timeit(kernels.conv2d_direct_numpy, x, w, 1, 1)
    print(f"conv2d 16x64x64 -> 32ch:   numba {t_nb * 1e3:8.2f} ms   "
          f"numpy {t_np * 1e3:8.2f} ms")
    if kernels.USE_NUMBA:
        a = kernels.conv2d_direct(x, w, 1, 1)
        b = kernels.conv2d_direct_numpy(x, w, 1, 1)
        assert np.allclose(a, b, rtol=1e-10), "paths disagree"


if __name__ == "__main__":
    print(f"numba dispatch enabled: {kernels.USE_NUMBA}")
    bench_nearest_codes()
    bench_conv2d()
