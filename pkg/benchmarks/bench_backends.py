"""Benchmark the jitted kernel against the pure-Python fallback.

Times the same game-value workloads under both backends and prints the
ratio. Run from the repository root:

    python3 benchmarks/bench_backends.py            # full set
    python3 benchmarks/bench_backends.py --quick    # smaller instances
"""

from __future__ import annotations

import argparse
import os
import time

from domgames import backend
from domgames.game import DOM, L, LL, TOTAL, Z, game_value
from domgames.graphs import generate
from domgames.products import cartesian_product
from domgames.trees import enumerate_free_trees


def workloads(quick: bool):
    path_n = 14 if quick else 18
    tree_n = 10 if quick else 12
    yield (f"P_{path_n} all five variants", _all_variants(generate("path", path_n)))
    ham = cartesian_product(generate("complete", 2),
                            generate("complete", 4 if quick else 5))
    yield ("K_2 x K_n Z/L/LL", _variants(ham, (Z, L, LL)))
    trees = list(enumerate_free_trees(tree_n))
    yield (f"census slice: {len(trees)} trees of order {tree_n}",
           _census_slice(trees))


def _variants(G, variants):
    def run():
        return [game_value(G, v) for v in variants]
    return run


def _all_variants(G):
    return _variants(G, (DOM, TOTAL, Z, L, LL))


def _census_slice(trees):
    def run():
        return [game_value(T, v) for T in trees for v in (Z, DOM, L)]
    return run


def timed(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def with_backend(name: str, fn, repeat: int) -> float:
    os.environ[backend.ENV_VAR] = name
    backend.reset()
    try:
        fn()  # warm-up: JIT compile / cache load stays out of the timing
        return timed(fn, repeat)
    finally:
        os.environ.pop(backend.ENV_VAR, None)
        backend.reset()


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"{'workload':44} {'numba':>10} {'python':>10} {'speedup':>8}")
    for label, fn in workloads(args.quick):
        t_numba = with_backend("numba", fn, args.repeat)
        t_python = with_backend("python", fn, args.repeat)
        print(f"{label:44} {t_numba:9.3f}s {t_python:9.3f}s "
              f"{t_python / t_numba:7.1f}x")


if __name__ == "__main__":
    main()
