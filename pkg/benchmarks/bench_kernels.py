#!/usr/bin/env python3
"""Benchmark the numba-jitted congruence kernels against the numpy fallback.

Runs the full mod-p^2 congruence sum for every odd prime up to --pmax with
both backends and reports wall times (numba timed after a warm-up call so JIT
compilation is not counted).
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from conjseries.exact import primes_up_to  # noqa: E402

SPEC = {"b1": 1, "c1": -12, "b2": 8, "c2": -3, "base": 5776,
        "w0": 1, "w1": 0}


def run(kernels, primes):
    out = []
    for p in primes:
        mod = p * p
        inv = pow(SPEC["base"] % mod, -1, mod)
        out.append(kernels.congruence_sum_kernel(
            p, mod, SPEC["b1"], SPEC["c1"], SPEC["b2"], SPEC["c2"],
            SPEC["w0"], SPEC["w1"], inv))
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pmax", type=int, default=300)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    primes = [p for p in primes_up_to(args.pmax)
              if p > 2 and SPEC["base"] % p]

    from conjseries import _kernels_numpy as knp
    try:
        from conjseries import _kernels_numba as knb
    except ImportError:
        knb = None
        print("numba not available; benchmarking numpy backend only")

    results = {}
    timings = {}
    backends = [("numpy", knp)] + ([("numba", knb)] if knb else [])
    for name, mod_ in backends:
        run(mod_, primes[:3])  # warm-up (JIT compile for numba)
        best = min(_timed(run, mod_, primes) for _ in range(args.repeat))
        timings[name] = best
        results[name] = run(mod_, primes)
        print(f"{name:>6}: {best:8.3f} s for {len(primes)} primes "
              f"(pmax={args.pmax})")

    if knb:
        assert results["numpy"] == results["numba"], "backend mismatch!"
        print(f"agreement: identical residues;  speedup "
              f"{timings['numpy'] / timings['numba']:.1f}x")


def _timed(fn, *a):
    t0 = time.perf_counter()
    fn(*a)
    return time.perf_counter() - t0


if __name__ == "__main__":
    main()
