"""Seeded sampling of the random uniform hypergraph H_s(n, p).

Every candidate ``s``-set is identified by its colex rank, which does not
depend on ``n``.  In the default (hashed) mode a candidate is kept iff a
splitmix64 hash of ``(seed, rank)`` falls below ``p * 2**64``.  Inclusion is
therefore a function of the seed and the hyperedge alone: thread partitioning
cannot change the output, and sampling on ``n' < n`` vertices gives exactly
the hyperedges of the ``n``-vertex sample that live inside ``0..n'-1``.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb

import numpy as np

from . import kernels
from .core import Hypergraph, m2_clique
from .errors import BudgetExceeded, InvalidParameter

DEFAULT_BUDGET = 10**9
_MASK = (1 << 64) - 1
_SPAN = 1 << 18


@dataclass(frozen=True)
class SampleConfig:
    n: int
    s: int
    p: float
    seed: int = 0

    def __post_init__(self):
        if not 2 <= self.s <= self.n:
            raise InvalidParameter(f"need 2 <= s <= n, got s={self.s}, n={self.n}")
        if not 0.0 <= self.p <= 1.0:
            raise InvalidParameter(f"p={self.p} outside [0, 1]")
        if not 0 <= self.seed <= _MASK:
            raise InvalidParameter(f"seed {self.seed} is not a 64-bit unsigned integer")

    @classmethod
    def from_dict(cls, data: dict) -> "SampleConfig":
        """Accepts either ``p`` or ``expected_edges`` next to ``n``, ``s``, ``seed``."""
        n, s = int(data["n"]), int(data["s"])
        if ("p" in data) == ("expected_edges" in data):
            raise InvalidParameter("give exactly one of 'p' and 'expected_edges'")
        if "p" in data:
            p = float(data["p"])
        else:
            p = p_for_expected_edges(n, s, float(data["expected_edges"]))
        return cls(n, s, p, int(data.get("seed", 0)))


def mix64(z: int) -> int:
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def _threshold(p: float) -> tuple[int, bool]:
    if p >= 1.0:
        return 0, True
    return min(int(math.ldexp(p, 64)), _MASK), False


@lru_cache(maxsize=64)
def _binom_table(n: int, s: int) -> np.ndarray:
    table = np.zeros((n + 1, s + 1), dtype=np.int64)
    for c in range(n + 1):
        for i in range(min(c, s) + 1):
            table[c, i] = comb(c, i)
    table.flags.writeable = False
    return table


def colex_rank(edge) -> int:
    return sum(comb(v, i + 1) for i, v in enumerate(sorted(edge)))


def colex_unrank(rank: int, s: int) -> tuple[int, ...]:
    """Inverse of :func:`colex_rank` in exact integer arithmetic."""
    out = [0] * s
    for i in range(s, 0, -1):
        lo, hi = i - 1, i - 1
        while comb(hi, i) <= rank:
            hi = 2 * hi + 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if comb(mid, i) <= rank:
                lo = mid
            else:
                hi = mid - 1
        out[i - 1] = lo
        rank -= comb(lo, i)
    return tuple(out)


def _canonical(n: int, s: int, rows: np.ndarray) -> Hypergraph:
    if rows.shape[0]:
        rows = rows[np.lexsort(rows.T[::-1])]
    h = Hypergraph.__new__(Hypergraph)
    h.n, h.s = n, s
    h.edges = tuple(map(tuple, rows.tolist()))
    return h


def sample_hypergraph(
    cfg: SampleConfig,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
    method: str = "auto",
) -> Hypergraph:
    """Draw H_s(n, p).

    ``method="hash"`` tests all C(n, s) candidates and raises
    :class:`BudgetExceeded` past ``budget``.  ``method="skip"`` jumps between
    kept ranks with geometric gaps (PCG64 stream seeded by ``cfg.seed``), so
    its cost scales with the number of kept hyperedges; it has the same
    distribution but not the per-hyperedge determinism of the hashed mode.
    ``"auto"`` hashes when the candidate count fits the budget.
    """
    n, s, p = cfg.n, cfg.s, cfg.p
    total = comb(n, s)
    if method == "auto":
        method = "hash" if total <= budget else "skip"
    if p == 0.0:
        return Hypergraph(n, s)
    if method == "hash":
        if total > budget:
            raise BudgetExceeded(f"C({n},{s}) = {total} candidates exceeds budget {budget}")
        threshold, take_all = _threshold(p)
        threshold, key = np.uint64(threshold), np.uint64(mix64(cfg.seed))
        spans = [(lo, min(total, lo + _SPAN)) for lo in range(0, total, _SPAN)]

        def run(span):
            return kernels.sample_ranks(key, threshold, take_all, *span)

        if threads > 1 and len(spans) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                parts = list(pool.map(run, spans))
        else:
            parts = [run(sp) for sp in spans]
        ranks = np.concatenate(parts)
        rows = kernels.colex_unrank(ranks, n, s, _binom_table(n, s))
        return _canonical(n, s, rows)
    if method == "skip":
        if p * total > budget:
            raise BudgetExceeded(f"expected {p * total:.3g} hyperedges exceeds budget {budget}")
        if p >= 1.0:
            raise BudgetExceeded("p = 1 requires enumerating every candidate; use method='hash'")
        rng = np.random.Generator(np.random.PCG64(cfg.seed))
        pos = -1
        found = []
        while True:
            pos += int(rng.geometric(p))
            if pos >= total:
                break
            found.append(colex_unrank(pos, s))
        return Hypergraph(n, s, found)
    raise InvalidParameter(f"unknown sampling method {method!r}")


def p_range(n: int, s: int, k: int) -> tuple[float, float]:
    """Window ``(n^(2-s-1/m2(K_{k-1})), n^(2-s-1/m2(K_k)))`` for the edge probability."""
    if k < 3:
        raise InvalidParameter(f"k must be >= 3, got {k}")
    if s < k:
        raise InvalidParameter(f"need s >= k, got s={s}, k={k}")
    lower = 2 - s - 1 / m2_clique(k - 1)
    upper = 2 - s - 1 / m2_clique(k)
    return float(n) ** float(lower), float(n) ** float(upper)


def p_for_expected_edges(n: int, s: int, m: float) -> float:
    if m < 0:
        raise InvalidParameter(f"expected edge count must be >= 0, got {m}")
    return min(1.0, m / comb(n, s))
