"""Time the compiled enumeration kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
from __future__ import annotations

import argparse
import sys
import timeit

from dowling_kit import kernels

CASES = [
    ("bpa_count", (7, 2)),
    ("bpa_count", (8, 3)),
    ("colored_partition_counts", (7, 2, 3)),
    ("colored_partition_counts", (9, 2, 2)),
]


def best_of(fn, args, repeat: int) -> float:
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeat))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if kernels.compiled_kernels is None:
        print("compiled extension not built; only the Python kernels are available", file=sys.stderr)
        return 1
    print(f"{'kernel':<26} {'args':<12} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, fargs in CASES:
        py = getattr(kernels.python_kernels, name)
        cy = getattr(kernels.compiled_kernels, name)
        if py(*fargs) != cy(*fargs):
            print(f"{name}{fargs}: backends disagree", file=sys.stderr)
            return 1
        t_py = best_of(py, fargs, args.repeat)
        t_cy = best_of(cy, fargs, args.repeat)
        print(f"{name:<26} {str(fargs):<12} {t_py:>10.4f} {t_cy:>10.4f} {t_py / t_cy:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
