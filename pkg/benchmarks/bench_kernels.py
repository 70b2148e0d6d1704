#!/usr/bin/env python3
"""Benchmark the exhaustive 4-linear sweep: compiled kernel vs pure Python.

Two workloads:

* the 7-dimensional algebra itself (2 401 basis 4-tuples);
* the 14-dimensional double of a pinned coboundary structure on it
  (38 416 basis 4-tuples) — the hot path of every membership check.

The dispatcher picks the compiled kernel automatically when it is built and
the table fits int64; ``MALCEVKIT_FORCE_PURE=1`` forces the fallback.  The
environment variable is read at call time, so this script toggles it around
the timed calls.

Usage: python benchmarks/bench_kernels.py [--repeats N]
"""

import argparse
import os
import time

from malcevkit import (
    FamilyParams,
    build_m7,
    coboundary_delta,
    drinfeld_double,
    family_r,
)
from malcevkit.kernels import available_backends, mal_exhaustive_witness

FORCE_PURE = "MALCEVKIT_FORCE_PURE"


def time_sweep(gamma, force_pure: bool, repeats: int) -> float:
    previous = os.environ.pop(FORCE_PURE, None)
    if force_pure:
        os.environ[FORCE_PURE] = "1"
    try:
        best = float("inf")
        for _ in range(repeats):
            start = time.perf_counter()
            hit = mal_exhaustive_witness(gamma)
            best = min(best, time.perf_counter() - start)
            assert hit is None, "benchmark tables are expected to be clean"
        return best
    finally:
        os.environ.pop(FORCE_PURE, None)
        if previous is not None:
            os.environ[FORCE_PURE] = previous


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--repeats", type=int, default=3, help="timing repeats, best-of (default 3)"
    )
    args = parser.parse_args()

    m7 = build_m7()
    delta = coboundary_delta(m7, family_r(FamilyParams())).scaled(-1)
    double = drinfeld_double(m7, delta).algebra

    workloads = [
        ("7-dim algebra (2401 tuples)", m7.gamma),
        ("14-dim double (38416 tuples)", double.gamma),
    ]

    backends = available_backends()
    print(f"backends built: {', '.join(backends)}")
    if "compiled" not in backends:
        print("compiled kernel not built; timing the pure backend only\n")

    header = f"{'workload':<32} {'pure':>10} {'compiled':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for name, gamma in workloads:
        pure = time_sweep(gamma, force_pure=True, repeats=args.repeats)
        if "compiled" in backends:
            compiled = time_sweep(gamma, force_pure=False, repeats=args.repeats)
            print(
                f"{name:<32} {pure:>9.4f}s {compiled:>9.4f}s {pure / compiled:>8.1f}x"
            )
        else:
            print(f"{name:<32} {pure:>9.4f}s {'-':>10} {'-':>9}")


if __name__ == "__main__":
    main()
