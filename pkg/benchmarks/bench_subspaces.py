"""Benchmark the two RREF subspace-counting backends against each other.

Every case is verified against eval_int(gauss(n, k), q) before timing is
reported, so a fast-but-wrong kernel cannot win.

Usage:
    python3 benchmarks/bench_subspaces.py
    python3 benchmarks/bench_subspaces.py --repeats 5 --cases 9,2,2 6,2,3
    QLATTICE_NO_NUMBA=1 python3 benchmarks/bench_subspaces.py   # numpy only
"""

import argparse
import time

from qlattice import _gf
from qlattice.qbinom import gauss

DEFAULT_CASES = [
    (4, 2, 2),
    (9, 2, 2),
    (19, 1, 2),
    (6, 2, 3),
    (4, 3, 3),
    (5, 2, 4),
]


def parse_case(text):
    parts = tuple(int(p) for p in text.split(","))
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected n,k,q, got {text!r}")
    return parts


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=3, help="best-of-N timing")
    ap.add_argument(
        "--cases", type=parse_case, nargs="+", default=DEFAULT_CASES,
        metavar="n,k,q",
    )
    args = ap.parse_args()

    backends = ["numpy"]
    if _gf.HAS_NUMBA:
        # throwaway call so JIT compilation is not billed to the first case
        _gf.count_distinct_rref(3, 1, 2, backend="numba")
        backends.insert(0, "numba")
    else:
        print("numba unavailable (not installed or disabled); timing numpy only")

    header = f"{'n':>3} {'k':>3} {'q':>2} {'matrices':>10}"
    for b in backends:
        header += f" {b + ' (s)':>12}"
    if len(backends) == 2:
        header += f" {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for n, k, q in args.cases:
        expect = gauss(n, k).eval_int(q)
        times = {}
        for b in backends:
            count = _gf.count_distinct_rref(n, k, q, backend=b)
            if count != expect:
                raise SystemExit(
                    f"backend {b} is wrong on ({n},{k},{q}): "
                    f"{count} != {expect}"
                )
            times[b] = best_of(
                lambda: _gf.count_distinct_rref(n, k, q, backend=b),
                args.repeats,
            )
        row = f"{n:>3} {k:>3} {q:>2} {q ** (k * n):>10}"
        for b in backends:
            row += f" {times[b]:>12.4f}"
        if len(backends) == 2:
            row += f" {times['numpy'] / times['numba']:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
