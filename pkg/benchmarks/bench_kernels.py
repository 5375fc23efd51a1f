"""Time metabolizer enumeration with the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat N] [--large]

``--large`` adds (7, 8): 275200 metabolizers, minutes in pure Python.
"""

import argparse
import time

from knotorder import kernels
from knotorder.metabolizer import DiagonalLinkingSpace, enumerate_metabolizers

CASES = [(7, 4), (11, 4), (19, 4), (23, 4), (3, 8), (7, 6), (31, 4)]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--large", action="store_true")
    args = ap.parse_args()
    cases = CASES + [(7, 8)] if args.large else CASES
    backends = sorted(kernels.BACKENDS)
    print(f"backends: {', '.join(backends)}")
    print(f"{'p':>3} {'d':>2} {'count':>6} " + " ".join(f"{b + ' (s)':>12}" for b in backends) + "  speedup")
    for p, d in cases:
        space = DiagonalLinkingSpace(p, d)
        times = {}
        counts = set()
        for b in backends:
            t, mets = best_of(lambda: enumerate_metabolizers(space, budget=10**7, backend=b), args.repeat)
            times[b] = t
            counts.add(len(mets))
        assert len(counts) == 1, "backends disagree"
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        print(f"{p:>3} {d:>2} {counts.pop():>6} " + " ".join(f"{times[b]:>12.4f}" for b in backends)
              + f"  {speed:6.1f}x")


if __name__ == "__main__":
    main()
