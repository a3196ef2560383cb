"""Exact and Monte Carlo checks of the counting quantities behind the construction.

Covers the pair-cover exponent alpha and its minimisation, the expected number
of hyperedge families inducing a given pair-cover, the expected number of
overlapping hyperedge pairs, and the probability that a graph pattern is hit
by distinct hyperedges.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb, sqrt
from typing import NamedTuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .conformal import PairCover
from .core import Graph, Hypergraph, m2_clique
from .errors import InvalidParameter, Unsupported
from .sampler import SampleConfig, sample_hypergraph

MAX_BRUTEFORCE_K = 4


def alpha(cover: PairCover, k: int) -> Fraction:
    """``(l - 1) / m2(K_k) + sum(|V_i| - 2)`` over the ``l`` parts, exactly."""
    if len(cover.base) != k:
        raise InvalidParameter(f"cover base has {len(cover.base)} vertices, expected {k}")
    ell = len(cover.parts)
    return Fraction(ell - 1) / m2_clique(k) + sum(len(v) - 2 for v in cover.parts)


def _candidate_parts(k: int):
    base = range(k)
    return [p for size in range(2, k + 1) for p in combinations(base, size)]


def nontrivial_pair_covers(k: int) -> list[PairCover]:
    """Every non-trivial pair-cover of ``{0, ..., k-1}`` (k <= 4)."""
    if k < 2:
        raise InvalidParameter(f"k must be >= 2, got {k}")
    if k > MAX_BRUTEFORCE_K:
        raise Unsupported(f"pair-cover enumeration is capped at k={MAX_BRUTEFORCE_K}")
    cand = _candidate_parts(k)
    pairs = list(combinations(range(k), 2))
    masks = []
    for part in cand:
        bits = 0
        for j, pr in enumerate(pairs):
            if set(pr) <= set(part):
                bits |= 1 << j
        masks.append(bits)
    full = (1 << len(pairs)) - 1
    whole = tuple(range(k))
    out = []
    for sel in range(1, 1 << len(cand)):
        covered = 0
        chosen = []
        for i in range(len(cand)):
            if sel >> i & 1:
                covered |= masks[i]
                chosen.append(cand[i])
        if covered == full and chosen != [whole]:
            out.append(PairCover(whole, chosen))
    return out


def min_alpha_bruteforce(k: int) -> tuple[Fraction, PairCover]:
    """Minimum of alpha over all non-trivial pair-covers of a ``k``-set, with one minimiser."""
    best = None
    for cover in nontrivial_pair_covers(k):
        a = alpha(cover, k)
        if best is None or a < best[0]:
            best = (a, cover)
    return best


def alpha_argmins(k: int) -> list[PairCover]:
    covers = nontrivial_pair_covers(k)
    values = [alpha(c, k) for c in covers]
    low = min(values)
    return [c for c, v in zip(covers, values) if v == low]


def expand_part(cover: PairCover, part) -> PairCover:
    """Replace ``part`` by all of its 2-subsets (parts already present merge)."""
    part = tuple(sorted(part))
    if part not in cover.parts:
        raise InvalidParameter(f"{part} is not a part of the cover")
    rest = [p for p in cover.parts if p != part]
    return PairCover(cover.base, set(rest) | set(combinations(part, 2)))


def expansion_chain(cover: PairCover) -> list[PairCover]:
    """Covers obtained by expanding parts in order of non-increasing size.

    Starts with ``cover`` and ends with the perfect pair-cover.
    """
    chain = [cover]
    for part in sorted(cover.parts, key=lambda p: (-len(p), p)):
        if len(part) > 2:
            chain.append(expand_part(chain[-1], part))
    return chain


def random_pair_cover(k: int, rng: np.random.Generator) -> PairCover:
    """Random non-trivial pair-cover: a random family of parts, completed with missing pairs."""
    base = tuple(range(k))
    cand = _candidate_parts(k)
    while True:
        keep = rng.random(len(cand)) < rng.uniform(0.05, 0.6)
        parts = {cand[i] for i in np.flatnonzero(keep)}
        covered = {pr for p in parts for pr in combinations(p, 2)}
        parts |= set(combinations(base, 2)) - covered
        if parts != {base}:
            return PairCover(base, parts)


def expected_X_C(n: int, s: int, k: int, p, cover: PairCover):
    """Expected number of hyperedge families ``{E_i}`` with ``E_i & S == V_i`` for every part.

    A hyperedge with ``E & S == V`` contains ``V`` and avoids the other
    ``k - |V|`` vertices of ``S``, so there are exactly ``C(n - k, s - |V|)``
    candidates per part.  Distinct parts draw on disjoint candidate sets, so
    the expectation factorises.  Exact when ``p`` is a ``Fraction`` or int.
    """
    if len(cover.base) != k:
        raise InvalidParameter(f"cover base has {len(cover.base)} vertices, expected {k}")
    if n < k + s or s < max(len(v) for v in cover.parts):
        raise InvalidParameter(f"inconsistent parameters n={n}, s={s}, k={k}")
    value = 1
    for v in cover.parts:
        value *= p * comb(n - k, s - len(v))
    return value


def observed_X_C(h: Hypergraph, cover: PairCover) -> int:
    S = set(cover.base)
    counts = dict.fromkeys(cover.parts, 0)
    for e in h.edges:
        t = tuple(sorted(S.intersection(e)))
        if t in counts:
            counts[t] += 1
    out = 1
    for c in counts.values():
        out *= c
    return out


def expected_Y_bound(n: int, s: int, p):
    """``C(n,s) * C(s,2) * C(n-2,s-2) * p**2``."""
    return comb(n, s) * comb(s, 2) * comb(n - 2, s - 2) * p * p


def expected_Y(n: int, s: int, p):
    """Exact expected number of unordered hyperedge pairs sharing >= 2 vertices."""
    ordered = comb(n, s) * sum(comb(s, j) * comb(n - s, s - j) for j in range(2, s))
    return Fraction(ordered, 2) * p * p if isinstance(p, (int, Fraction)) else ordered / 2 * p * p


def count_overlapping_pairs(h: Hypergraph) -> int:
    if not h.edges:
        return 0
    arr = np.zeros((len(h.edges), h.n), dtype=np.int32)
    for i, e in enumerate(h.edges):
        arr[i, list(e)] = 1
    inter = arr @ arr.T
    return int(np.count_nonzero(np.triu(inter >= 2, 1)))


@dataclass(frozen=True)
class SubgraphPattern:
    """Graph ``J`` whose edges must sit in pairwise distinct hyperedges."""

    graph: Graph

    @property
    def edges(self):
        return self.graph.edges()

    @classmethod
    def from_edges(cls, edges) -> "SubgraphPattern":
        edges = list(edges)
        n = 1 + max((max(e) for e in edges), default=-1)
        return cls(Graph(n, edges))


def embeds(pattern: SubgraphPattern, h: Hypergraph) -> bool:
    """Whether distinct hyperedges ``E_i`` with ``e_i`` inside ``E_i`` exist for all pattern edges."""
    pe = pattern.edges
    if not pe:
        return True
    if not h.edges:
        return False
    arr = np.array(h.edges, dtype=np.int64)
    rows = []
    for u, v in pe:
        hit = (arr == u).any(axis=1) & (arr == v).any(axis=1)
        if not hit.any():
            return False
        rows.append(hit)
    bi = csr_matrix(np.array(rows, dtype=np.int8))
    match = maximum_bipartite_matching(bi, perm_type="column")
    return bool((match >= 0).all())


def trial_seeds(seed: int, trials: int) -> list[int]:
    return np.random.SeedSequence(seed).generate_state(trials, np.uint64).tolist()


class SubsetProbability(NamedTuple):
    frequency: float
    bound: float
    trials: int
    stderr: float

    def to_dict(self) -> dict:
        return self._asdict()


class MonteCarloMean(NamedTuple):
    mean: float
    stderr: float
    trials: int

    def to_dict(self) -> dict:
        return self._asdict()


def _samples(n, s, p, trials, seed):
    for ts in trial_seeds(seed, trials):
        yield sample_hypergraph(SampleConfig(n, s, p, ts))


def mc_subset_probability(
    pattern: SubgraphPattern, n: int, s: int, p: float, trials: int, seed: int = 0
) -> SubsetProbability:
    """Empirical frequency of ``J`` being hit by distinct hyperedges, next to ``(p C(n-2,s-2))^e(J)``."""
    if trials < 1:
        raise InvalidParameter("need at least one trial")
    if pattern.graph.n > n:
        raise InvalidParameter("pattern vertices exceed n")
    hits = sum(embeds(pattern, h) for h in _samples(n, s, p, trials, seed))
    freq = hits / trials
    bound = (p * comb(n - 2, s - 2)) ** pattern.graph.m
    return SubsetProbability(freq, float(bound), trials, sqrt(freq * (1 - freq) / trials))


def _mean(values) -> MonteCarloMean:
    x = np.asarray(values, dtype=float)
    se = float(x.std(ddof=1) / sqrt(len(x))) if len(x) > 1 else 0.0
    return MonteCarloMean(float(x.mean()), se, len(x))


def mc_X_C(n: int, s: int, p: float, cover: PairCover, trials: int, seed: int = 0) -> MonteCarloMean:
    return _mean([observed_X_C(h, cover) for h in _samples(n, s, p, trials, seed)])


def mc_Y(n: int, s: int, p: float, trials: int, seed: int = 0) -> MonteCarloMean:
    return _mean([count_overlapping_pairs(h) for h in _samples(n, s, p, trials, seed)])


def mc_edge_count(n: int, s: int, p: float, trials: int, seed: int = 0) -> MonteCarloMean:
    return _mean([len(h) for h in _samples(n, s, p, trials, seed)])
