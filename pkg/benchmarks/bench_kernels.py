"""Benchmark the compiled kernels against the pure-Python fallback.

Both backends are imported directly (ignoring the import-time selection)
and timed on the two hot paths: all-pairs BFS and random-walk batches.
Results must be identical; only the wall time differs.

Usage: python3 benchmarks/bench_kernels.py [--sizes 100,400,1000] [--trials 2000]
"""
import argparse
import time

import numpy as np

from growtree import _pykernels
from growtree.graph import random_tree

try:
    from growtree import _ckernels
except ImportError:
    _ckernels = None


def _time(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def bench_bfs(sizes):
    print(f"{'all-pairs BFS':<24}{'n':>8}{'python ms':>12}{'compiled ms':>13}{'speedup':>9}")
    for n in sizes:
        g = random_tree(n, 42).graph
        indptr, indices = g.csr()
        t_py, d_py = _time(_pykernels.all_pairs_bfs, indptr, indices, n)
        if _ckernels is None:
            print(f"{'':<24}{n:>8}{t_py * 1e3:>12.2f}{'n/a':>13}{'n/a':>9}")
            continue
        t_c, d_c = _time(_ckernels.all_pairs_bfs, indptr, indices, n)
        assert np.array_equal(d_py, d_c)
        print(f"{'':<24}{n:>8}{t_py * 1e3:>12.2f}{t_c * 1e3:>13.2f}"
              f"{t_py / t_c:>8.1f}x")


def bench_walks(trials):
    print(f"{'hitting-time walks':<24}{'trials':>8}{'python ms':>12}{'compiled ms':>13}{'speedup':>9}")
    g = random_tree(200, 7).graph
    indptr, indices = g.csr()
    args = (indptr, indices, 0, g.n - 1, 0, trials, 99, 100 * g.n * g.n)
    t_py, r_py = _time(_pykernels.hitting_trials, *args)
    if _ckernels is None:
        print(f"{'':<24}{trials:>8}{t_py * 1e3:>12.2f}{'n/a':>13}{'n/a':>9}")
        return
    t_c, r_c = _time(_ckernels.hitting_trials, *args)
    assert r_py == tuple(r_c)
    print(f"{'':<24}{trials:>8}{t_py * 1e3:>12.2f}{t_c * 1e3:>13.2f}"
          f"{t_py / t_c:>8.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="100,400,1000",
                        help="comma-separated tree sizes for the BFS bench")
    parser.add_argument("--trials", type=int, default=2000,
                        help="walk count for the hitting-time bench")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    if _ckernels is None:
        print("compiled extension unavailable; timing fallback only")
    bench_bfs(sizes)
    print()
    bench_walks(args.trials)


if __name__ == "__main__":
    main()
