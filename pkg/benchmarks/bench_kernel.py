"""Compare the compiled and pure-Python PBW kernels.

    python benchmarks/bench_kernel.py [--reps 3]

Each workload runs on a fresh kernel (cold memo tables), so the numbers
include rewriting work and not just cache lookups.
"""

import argparse
import random
import time
from itertools import combinations

from qgr._pykernel import PBWKernel as PyKernel
from qgr.qmatrix import Ambient, minor_raw

try:
    from qgr._kernel import PBWKernel as CyKernel
except ImportError:
    CyKernel = None


def words(m, n, length, count, seed):
    rng = random.Random(seed)
    return [[rng.randrange(m * n) for _ in range(length)] for _ in range(count)]


def run_words(cls, m, n, ws):
    k = cls(m, n)
    for w in ws:
        k.word(w)


def run_tableaux(cls, m, n, d, count, seed):
    amb = Ambient(m, n)
    rng = random.Random(seed)
    gens = list(combinations(range(1, n + 1), m))
    rows = tuple(range(1, m + 1))
    k = cls(m, n)
    for _ in range(count):
        acc = {(): {0: 1}}
        for _ in range(d):
            acc = k.mul(acc, minor_raw(amb, rows, rng.choice(gens)))


WORKLOADS = [
    ("words 3x4 len 10 x200", lambda cls: run_words(cls, 3, 4, words(3, 4, 10, 200, 1))),
    ("words 4x4 len 14 x20", lambda cls: run_words(cls, 4, 4, words(4, 4, 14, 20, 2))),
    ("tableaux 3x6 d=3 x40", lambda cls: run_tableaux(cls, 3, 6, 3, 40, 3)),
    ("tableaux 2x5 d=5 x40", lambda cls: run_tableaux(cls, 2, 5, 5, 40, 4)),
]


def best_of(fn, reps):
    best = float("inf")
    for _ in range(reps):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--reps", type=int, default=3)
    args = ap.parse_args()
    print(f"{'workload':28s} {'python':>9s} {'cython':>9s} {'speedup':>8s}")
    for name, fn in WORKLOADS:
        tp = best_of(lambda: fn(PyKernel), args.reps)
        if CyKernel is None:
            print(f"{name:28s} {tp:9.3f} {'n/a':>9s}")
            continue
        tc = best_of(lambda: fn(CyKernel), args.reps)
        print(f"{name:28s} {tp:9.3f} {tc:9.3f} {tp / tc:7.2f}x")


if __name__ == "__main__":
    main()
