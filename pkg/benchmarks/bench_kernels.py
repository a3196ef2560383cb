"""Compiled kernels against the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Both backends are imported directly, so the ARROWGRAPH_NO_NUMBA flag is irrelevant here.
"""
import argparse
import time

import numpy as np

from arrowgraph.arrowing import _attach_cliques, search_edge_order
from arrowgraph.core import Graph
from arrowgraph.kernels import _numba, _python
from arrowgraph.sampler import _binom_table, _threshold, mix64


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def sampling_case():
    key, thr = np.uint64(mix64(1)), np.uint64(_threshold(1e-3)[0])
    table = _binom_table(60, 5)

    def run(mod):
        ranks = mod.sample_ranks(key, thr, False, 0, 2_000_000)
        mod.colex_unrank(ranks, 60, 5, table)
    return "sample 2e6 ranks, p=1e-3", run


def clique_case():
    rng = np.random.default_rng(0)
    n = 150
    upper = np.triu(rng.random((n, n)) < 0.4, 1)
    g = Graph.from_adjacency(upper | upper.T)
    bits = g.bitsets
    return "count K_5 in G(150, 0.4)", lambda mod: mod.count_cliques(bits, 5, 0, n, 0)


def arrow_case():
    g = Graph.complete(9)
    order = search_edge_order(g)
    eidx = np.full((9, 9), -1, dtype=np.int64)
    for i, (u, v) in enumerate(order):
        eidx[u, v] = eidx[v, u] = i
    m = len(order)
    args = (m, *_attach_cliques(g, 3, eidx, m), *_attach_cliques(g, 4, eidx, m))
    budget = 200_000

    def run(mod):
        mod.arrow_search(*args, budget, np.zeros(m, dtype=np.int8))
    return f"arrowing K_9 -> (3,4), {budget} nodes", run


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    print(f"{'case':40s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}")
    for name, run in (sampling_case(), clique_case(), arrow_case()):
        run(_numba)  # JIT warm-up
        fast = _best(lambda: run(_numba), args.repeat)
        slow = _best(lambda: run(_python), args.repeat)
        print(f"{name:40s} {fast:10.4f} {slow:10.4f} {slow / fast:8.1f}x")


if __name__ == "__main__":
    main()
