"""Pair-covers, k-conformality, and pruning to a linear k-conformal hypergraph."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .core import Hypergraph, clique_array, primal_graph
from .errors import InvalidParameter


def _canon_family(parts: Iterable[Iterable[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(sorted({tuple(sorted(p)) for p in parts}))


@dataclass(frozen=True)
class PairCover:
    """A family of distinct subsets of ``base`` (each of size >= 2) covering every pair of ``base``."""

    base: tuple[int, ...]
    parts: tuple[tuple[int, ...], ...]

    def __init__(self, base: Iterable[int], parts: Iterable[Iterable[int]]):
        parts = [tuple(sorted(p)) for p in parts]
        if len(set(parts)) != len(parts):
            raise InvalidParameter("pair-cover parts must be distinct")
        base_t = tuple(sorted(set(base)))
        if not is_pair_cover(parts, base_t):
            raise InvalidParameter(f"{parts} does not cover every pair of {base_t}")
        object.__setattr__(self, "base", base_t)
        object.__setattr__(self, "parts", _canon_family(parts))

    def __len__(self):
        return len(self.parts)

    @property
    def is_trivial(self) -> bool:
        return self.parts == (self.base,)

    @property
    def is_perfect(self) -> bool:
        return self.parts == tuple(combinations(self.base, 2))

    @classmethod
    def perfect(cls, base: Iterable[int]) -> "PairCover":
        base = sorted(set(base))
        return cls(base, combinations(base, 2))


def is_pair_cover(parts: Iterable[Sequence[int]], S: Iterable[int]) -> bool:
    S = set(S)
    covered = set()
    for part in parts:
        p = set(part)
        if len(p) < 2:
            raise InvalidParameter(f"part {tuple(part)} has fewer than 2 vertices")
        if not p <= S:
            raise InvalidParameter(f"part {tuple(part)} is not a subset of {sorted(S)}")
        covered.update(combinations(sorted(p), 2))
    return covered >= set(combinations(sorted(S), 2))


def pair_trace(h: Hypergraph, S: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Distinct traces ``E & S`` of hyperedges meeting ``S`` in at least two vertices."""
    S = set(S)
    return _canon_family(t for e in h.edges if len(t := S.intersection(e)) >= 2)


class _PairIndex:
    """Map from vertex pairs to the (sorted) indices of hyperedges containing them."""

    def __init__(self, edges: Sequence[tuple[int, ...]]):
        self.owners: dict[tuple[int, int], list[int]] = {}
        for i, e in enumerate(edges):
            for pair in combinations(e, 2):
                self.owners.setdefault(pair, []).append(i)

    def covers(self, edges, clique) -> bool:
        cs = set(clique)
        return any(cs.issubset(edges[i]) for i in self.owners.get((clique[0], clique[1]), ()))


def enumerate_noncovered_cliques(h: Hypergraph, k: int, threads: int = 1) -> list[tuple[int, ...]]:
    """``k``-cliques of the primal graph lying in no single hyperedge, in lexicographic order.

    The list is empty exactly when ``h`` is ``k``-conformal.
    """
    if not 3 <= k <= h.s:
        raise InvalidParameter(f"need 3 <= k <= s, got k={k}, s={h.s}")
    index = _PairIndex(h.edges)
    cliques = clique_array(primal_graph(h), k, threads).tolist()
    return [tuple(c) for c in cliques if not index.covers(h.edges, c)]


def is_k_conformal(h: Hypergraph, k: int) -> bool:
    return not enumerate_noncovered_cliques(h, k)


@dataclass
class PruneReport:
    removed_for_linearity: list[tuple[int, ...]] = field(default_factory=list)
    removed_for_conformality: list[tuple[int, ...]] = field(default_factory=list)
    surviving: int = 0

    @property
    def removed(self) -> int:
        return len(self.removed_for_linearity) + len(self.removed_for_conformality)

    def to_dict(self) -> dict:
        return {
            "removed_for_linearity": [list(e) for e in self.removed_for_linearity],
            "removed_for_conformality": [list(e) for e in self.removed_for_conformality],
            "surviving": self.surviving,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PruneReport":
        return cls(
            [tuple(e) for e in data["removed_for_linearity"]],
            [tuple(e) for e in data["removed_for_conformality"]],
            int(data["surviving"]),
        )

    def write(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_dict()) + "\n")


def _linear_pass(edges):
    """Drop every hyperedge sharing a pair with an earlier surviving one."""
    owner: dict[tuple[int, int], int] = {}
    kept, dropped = [], []
    for e in edges:
        pairs = list(combinations(e, 2))
        if any(p in owner for p in pairs):
            dropped.append(e)
            continue
        idx = len(kept)
        kept.append(e)
        for p in pairs:
            owner[p] = idx
    return kept, dropped, owner


def prune_to_conformal(h: Hypergraph, k: int, threads: int = 1) -> tuple[Hypergraph, PruneReport]:
    """Greedy repair into a linear ``k``-conformal subhypergraph.

    First, hyperedges are scanned in lexicographic order and any hyperedge
    sharing two vertices with an earlier survivor is dropped.  Then, while some
    ``k``-clique of the primal graph is uncovered, the lexicographically first
    such clique is destroyed by dropping the lexicographically first hyperedge
    that contains one of its pairs.  In a linear hypergraph every primal edge
    has a unique owner, so a removal deletes all pairs of that hyperedge and
    never creates a new uncovered clique; the sorted list of uncovered cliques
    computed once is therefore consumed in order, skipping dead entries.
    """
    if not 3 <= k <= h.s:
        raise InvalidParameter(f"need 3 <= k <= s, got k={k}, s={h.s}")
    kept, dropped_lin, owner = _linear_pass(h.edges)
    linear = Hypergraph(h.n, h.s, kept)
    alive = [True] * len(kept)
    dropped_conf = []
    for clique in enumerate_noncovered_cliques(linear, k, threads):
        owners = [owner[p] for p in combinations(clique, 2)]
        if not all(alive[i] for i in owners):
            continue
        victim = min(owners)
        alive[victim] = False
        dropped_conf.append(kept[victim])
    h0 = Hypergraph(h.n, h.s, [e for i, e in enumerate(kept) if alive[i]])
    return h0, PruneReport(dropped_lin, dropped_conf, len(h0))
