"""Compare the numba and numpy kernels.

    python3 benchmarks/bench_kernels.py [--repeat 200]

Prints per-call timings of ``refine`` and ``min_encoding`` on random
multigraphs of growing size, then the wall time to certify the budget-5
universe with each backend forced. Compile time is reported separately.
"""

import argparse
import itertools
import time

import numpy as np

from topodeck import _kernels, _kernels_numba, _kernels_numpy
from topodeck.canon import certificate
from topodeck.harness import EnumerationBudget, enumerate_canonical


def random_case(rng, n):
    upper = rng.integers(0, 3, size=n * (n - 1) // 2)
    adj = np.zeros((n, n), dtype=np.int64)
    adj[np.triu_indices(n, 1)] = upper
    adj = adj + adj.T
    colors = rng.integers(0, 2, size=n).astype(np.int64)
    return adj, colors


def per_call(fn, args, repeat):
    start = time.perf_counter()
    for _ in range(repeat):
        fn(*args)
    return (time.perf_counter() - start) / repeat


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()
    rng = np.random.default_rng(0)

    adj, colors = random_case(rng, 4)
    perms = np.array(list(itertools.permutations(range(4))), dtype=np.int64)
    start = time.perf_counter()
    _kernels_numba.refine(adj, colors)
    _kernels_numba.min_encoding(adj, colors, colors, perms)
    print(f"numba first call (load or compile): {time.perf_counter() - start:.3f}s")

    print(f"{'kernel':<14}{'n':>4}{'work':>10}{'numpy us':>12}{'numba us':>12}{'speedup':>9}")
    for n in (3, 5, 8, 12, 20, 40, 80):
        adj, colors = random_case(rng, n)
        t_np = per_call(_kernels_numpy.refine, (adj, colors), args.repeat)
        t_nb = per_call(_kernels_numba.refine, (adj, colors), args.repeat)
        print(f"{'refine':<14}{n:>4}{n * n:>10}{t_np * 1e6:>12.1f}{t_nb * 1e6:>12.1f}{t_np / t_nb:>9.1f}")
    for n in (2, 3, 4, 5, 6, 7):
        adj, colors = random_case(rng, n)
        perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
        opens = rng.integers(0, 2, size=n).astype(np.int64)
        case = (adj, opens, colors, perms)
        reps = max(1, args.repeat // (1 + len(perms) // 50))
        t_np = per_call(_kernels_numpy.min_encoding, case, reps)
        t_nb = per_call(_kernels_numba.min_encoding, case, reps)
        work = len(perms) * n * n
        print(f"{'min_encoding':<14}{n:>4}{work:>10}{t_np * 1e6:>12.1f}{t_nb * 1e6:>12.1f}{t_np / t_nb:>9.1f}")

    graphs = list(enumerate_canonical(EnumerationBudget(5)))
    saved = (_kernels.BACKEND, _kernels._impl, _kernels._calls)
    modes = (("numpy", "numpy", _kernels_numpy), ("numba", "numba", _kernels_numba), ("warm-up switch", "numba", _kernels_numpy))
    for label, backend, impl in modes:
        _kernels.BACKEND, _kernels._impl, _kernels._calls = backend, impl, 0
        start = time.perf_counter()
        for g in graphs:
            certificate(g)
        print(f"certify {len(graphs)} graphs ({label}): {time.perf_counter() - start:.2f}s")
    _kernels.BACKEND, _kernels._impl, _kernels._calls = saved


if __name__ == "__main__":
    main()
