"""Compare the compiled kernels against the pure-Python fallback.

Times the three hot loops (inversion counting, repeat detection, SSYT
enumeration) on representative workloads and prints a speedup table.
Run from the repository root after an editable install:

    python3 benchmarks/bench_kernels.py
"""

import argparse
import itertools
import random
import time

from flagsplit import _kernels
from flagsplit._kernels import _pure


def backends():
    out = [("pure", _pure)]
    if _kernels.BACKEND == "cython":
        from flagsplit._kernels import _speedups

        out.append(("cython", _speedups))
    return out


def bench(label, func, payload, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        func(payload)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def inversion_workload(rng, count, n):
    return [tuple(rng.sample(range(4 * n), n)) for _ in range(count)]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--vectors", type=int, default=20000)
    args = parser.parse_args()

    rng = random.Random(20240)
    vectors = inversion_workload(rng, args.vectors, 8)
    shapes = [
        ((6, 4, 2), 5),
        ((8, 6, 4, 2), 5),
        ((5, 5, 5), 6),
    ]

    rows = []
    for name, mod in backends():
        t_inv = bench(
            name,
            lambda vs: [mod.inversion_count(v) for v in vs],
            vectors,
            args.repeat,
        )
        t_rep = bench(
            name,
            lambda vs: [mod.has_repeat(v) for v in vs],
            vectors,
            args.repeat,
        )
        t_ssyt = bench(
            name,
            lambda ss: [mod.ssyt_count(lam, n) for lam, n in ss],
            shapes,
            args.repeat,
        )
        rows.append((name, t_inv, t_rep, t_ssyt))

    print(f"active backend: {_kernels.BACKEND}")
    print(f"{'backend':<8} {'inversions':>12} {'has_repeat':>12} {'ssyt':>12}")
    for name, t_inv, t_rep, t_ssyt in rows:
        print(f"{name:<8} {t_inv:>11.4f}s {t_rep:>11.4f}s {t_ssyt:>11.4f}s")
    if len(rows) == 2:
        base = rows[0]
        fast = rows[1]
        for label, b, f in zip(
            ("inversions", "has_repeat", "ssyt"), base[1:], fast[1:]
        ):
            print(f"speedup {label}: {b / f:.1f}x")


if __name__ == "__main__":
    main()
