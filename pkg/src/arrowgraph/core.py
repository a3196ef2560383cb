"""Graphs, uniform hypergraphs, clique enumeration and clique 2-densities."""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import InvalidParameter

Rational = Fraction


class Graph:
    """Simple undirected graph on ``0..n-1`` backed by a dense adjacency matrix.

    Instances are immutable; the matrix is exposed read-only.
    """

    __slots__ = ("n", "_adj", "_bits")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise InvalidParameter(f"negative vertex count {n}")
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if u == v:
                raise InvalidParameter(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge {(u, v)} out of range for n={n}")
            adj[u, v] = adj[v, u] = True
        self._init(adj)

    def _init(self, adj):
        adj.flags.writeable = False
        self.n = adj.shape[0]
        self._adj = adj
        self._bits = None

    @classmethod
    def from_adjacency(cls, adj) -> "Graph":
        adj = np.array(adj, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise InvalidParameter("adjacency must be square")
        if adj.diagonal().any() or (adj != adj.T).any():
            raise InvalidParameter("adjacency must be symmetric with empty diagonal")
        g = cls.__new__(cls)
        g._init(adj)
        return g

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_adjacency(~np.eye(n, dtype=bool))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @property
    def adjacency(self) -> np.ndarray:
        return self._adj

    @property
    def m(self) -> int:
        return int(np.count_nonzero(self._adj)) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        us, vs = np.nonzero(np.triu(self._adj, 1))
        return list(zip(us.tolist(), vs.tolist()))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def degree(self, v: int) -> int:
        return int(np.count_nonzero(self._adj[v]))

    @property
    def bitsets(self) -> np.ndarray:
        """Adjacency rows packed little-endian into ``uint64`` words, shape (n, W)."""
        if self._bits is None:
            words = max(1, (self.n + 63) // 64)
            packed = np.packbits(self._adj, axis=1, bitorder="little")
            raw = np.zeros((self.n, words * 8), dtype=np.uint8)
            raw[:, : packed.shape[1]] = packed
            self._bits = raw.view("<u8").astype(np.uint64)
            self._bits.flags.writeable = False
        return self._bits

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and bool((self._adj == other._adj).all())

    def __hash__(self):
        return hash((self.n, tuple(self.edges())))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


class Hypergraph:
    """``s``-uniform hypergraph with hyperedges stored in canonical order.

    Each hyperedge is a sorted tuple; the tuple of hyperedges is sorted
    lexicographically and duplicate-free, so equal hypergraphs compare equal.
    """

    __slots__ = ("n", "s", "edges")

    def __init__(self, n: int, s: int, edges: Iterable[Sequence[int]] = ()):
        if s < 2:
            raise InvalidParameter(f"uniformity must be >= 2, got {s}")
        if n < 0:
            raise InvalidParameter(f"negative vertex count {n}")
        canon = set()
        for e in edges:
            t = tuple(sorted(int(v) for v in e))
            if len(t) != s or len(set(t)) != s:
                raise InvalidParameter(f"hyperedge {tuple(e)} does not have {s} distinct vertices")
            if t[0] < 0 or t[-1] >= n:
                raise InvalidParameter(f"hyperedge {t} out of range for n={n}")
            canon.add(t)
        self.n = n
        self.s = s
        self.edges: tuple[tuple[int, ...], ...] = tuple(sorted(canon))

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, e):
        return tuple(sorted(e)) in set(self.edges)

    def __eq__(self, other):
        return (
            isinstance(other, Hypergraph)
            and (self.n, self.s, self.edges) == (other.n, other.s, other.edges)
        )

    def __hash__(self):
        return hash((self.n, self.s, self.edges))

    def __repr__(self):
        return f"Hypergraph(n={self.n}, s={self.s}, e={len(self.edges)})"

    def without(self, removed: Iterable[Sequence[int]]) -> "Hypergraph":
        drop = {tuple(sorted(e)) for e in removed}
        return Hypergraph(self.n, self.s, [e for e in self.edges if e not in drop])

    def to_dict(self) -> dict:
        return {"n": self.n, "s": self.s, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_dict(cls, data: dict) -> "Hypergraph":
        try:
            return cls(int(data["n"]), int(data["s"]), data["edges"])
        except (KeyError, TypeError) as exc:
            raise InvalidParameter(f"malformed hypergraph record: {exc}") from exc


def read_graph(path) -> Graph:
    """Read the ``n m`` header followed by ``m`` lines ``u v``."""
    lines = [ln.split() for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise InvalidParameter(f"{path}: expected header 'n m'")
    n, m = map(int, lines[0])
    edges = [tuple(map(int, ln)) for ln in lines[1:]]
    if len(edges) != m or any(len(e) != 2 for e in edges):
        raise InvalidParameter(f"{path}: header announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


def write_graph(g: Graph, path) -> None:
    edges = g.edges()
    body = "".join(f"{u} {v}\n" for u, v in edges)
    Path(path).write_text(f"{g.n} {len(edges)}\n{body}")


def read_hypergraph(path) -> Hypergraph:
    return Hypergraph.from_dict(json.loads(Path(path).read_text()))


def write_hypergraph(h: Hypergraph, path) -> None:
    Path(path).write_text(json.dumps(h.to_dict()) + "\n")


def m2_clique(t: int) -> Fraction:
    """Maximum 2-density of ``K_t``: ``(C(t,2) - 1) / (t - 2)``.

    ``K_2`` gets the value 1/2 by convention, so that ``2 - s - 1/m2(K_2)``
    equals ``-s``.
    """
    if t < 2:
        raise InvalidParameter(f"m2 of K_{t} is undefined")
    if t == 2:
        return Fraction(1, 2)
    return Fraction(comb(t, 2) - 1, t - 2)


def primal_graph(h: Hypergraph) -> Graph:
    adj = np.zeros((h.n, h.n), dtype=bool)
    if h.edges:
        arr = np.array(h.edges, dtype=np.int64)
        for i, j in combinations(range(h.s), 2):
            adj[arr[:, i], arr[:, j]] = True
    adj |= adj.T
    return Graph.from_adjacency(adj)


def is_linear(h: Hypergraph):
    """Return ``(True, None)`` or ``(False, (E, F))`` for two hyperedges sharing >= 2 vertices."""
    owner: dict[tuple[int, int], tuple[int, ...]] = {}
    for e in h.edges:
        for pair in combinations(e, 2):
            prev = owner.get(pair)
            if prev is not None:
                return False, (prev, e)
            owner[pair] = e
    return True, None


def _chunks(n: int, threads: int):
    if threads <= 1 or n < 2:
        return [(0, n)]
    pieces = min(n, 4 * threads)
    bounds = np.linspace(0, n, pieces + 1).astype(int)
    return [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]


def _map_chunks(fn, n, threads):
    chunks = _chunks(n, threads)
    if len(chunks) == 1:
        return [fn(*chunks[0])]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda c: fn(*c), chunks))


def clique_array(g: Graph, t: int, threads: int = 1) -> np.ndarray:
    """All ``t``-cliques as rows of an int array, each row ascending, rows lexicographic."""
    if t < 1:
        raise InvalidParameter(f"clique size must be >= 1, got {t}")
    if t > g.n:
        return np.empty((0, t), dtype=np.int64)
    if t == 1:
        return np.arange(g.n, dtype=np.int64).reshape(-1, 1)
    bits = g.bitsets
    parts = _map_chunks(lambda lo, hi: kernels.list_cliques(bits, t, lo, hi), g.n, threads)
    return np.concatenate(parts) if len(parts) > 1 else parts[0]


def cliques_of_size(g: Graph, t: int, threads: int = 1) -> list[tuple[int, ...]]:
    return [tuple(row) for row in clique_array(g, t, threads).tolist()]


def count_cliques(g: Graph, t: int, threads: int = 1) -> int:
    if t < 1:
        raise InvalidParameter(f"clique size must be >= 1, got {t}")
    if t > g.n:
        return 0
    if t == 1:
        return g.n
    bits = g.bitsets
    return sum(_map_chunks(lambda lo, hi: kernels.count_cliques(bits, t, lo, hi, 0), g.n, threads))


def contains_clique(g: Graph, t: int) -> bool:
    if t <= 1:
        return g.n >= t
    if t > g.n:
        return False
    return kernels.count_cliques(g.bitsets, t, 0, g.n, 1) > 0


def find_clique(g: Graph, t: int):
    """First ``t``-clique in lexicographic order, or ``None``."""
    if t < 1 or t > g.n:
        return None
    if t == 1:
        return (0,)
    bits = g.bitsets
    for v in range(g.n):
        if kernels.count_cliques(bits, t, v, v + 1, 1):
            return tuple(kernels.list_cliques(bits, t, v, v + 1)[0].tolist())
    return None
