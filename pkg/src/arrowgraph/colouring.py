"""Red/blue edge colourings, Ramsey-critical base colourings and the witness tiling."""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Mapping

import numpy as np

from .core import Graph, Hypergraph, count_cliques, find_clique, is_linear
from .errors import ColouringRejected, IllDefinedColouring, InvalidParameter, Unsupported

RED, BLUE = 0, 1
_NAMES = {RED: "R", BLUE: "B"}
_CODES = {"R": RED, "B": BLUE}

# nonzero quadratic residues mod 17; re-derived in tests
PALEY17_RESIDUES = frozenset({1, 2, 4, 8, 9, 13, 15, 16})


def _colour_code(colour) -> int:
    if colour in (RED, BLUE):
        return int(colour)
    if isinstance(colour, str) and colour[:1].upper() in _CODES:
        return _CODES[colour[:1].upper()]
    raise InvalidParameter(f"unknown colour {colour!r}")


class EdgeColouring:
    """Total assignment of red/blue to the edges of a graph.

    Stored as an ``n x n`` int8 matrix: -1 off the edge set, 0 red, 1 blue.
    """

    __slots__ = ("graph", "_col")

    def __init__(self, graph: Graph, colours: Mapping[tuple[int, int], object]):
        mat = np.full((graph.n, graph.n), -1, dtype=np.int8)
        for (u, v), c in colours.items():
            mat[u, v] = mat[v, u] = _colour_code(c)
        self._init(graph, mat)

    def _init(self, graph, mat):
        on_edges = mat[graph.adjacency]
        if (on_edges < 0).any():
            raise InvalidParameter("colouring is not total on the edge set")
        if (mat[~graph.adjacency] >= 0).any():
            raise InvalidParameter("colouring assigns a colour to a non-edge")
        if (mat != mat.T).any():
            raise InvalidParameter("colour matrix must be symmetric")
        mat.flags.writeable = False
        self.graph = graph
        self._col = mat

    @classmethod
    def from_matrix(cls, graph: Graph, mat) -> "EdgeColouring":
        c = cls.__new__(cls)
        c._init(graph, np.array(mat, dtype=np.int8))
        return c

    @classmethod
    def uniform(cls, graph: Graph, colour=RED) -> "EdgeColouring":
        mat = np.where(graph.adjacency, _colour_code(colour), -1).astype(np.int8)
        return cls.from_matrix(graph, mat)

    @property
    def matrix(self) -> np.ndarray:
        return self._col

    def colour(self, u: int, v: int) -> int:
        c = int(self._col[u, v])
        if c < 0:
            raise KeyError((u, v))
        return c

    def colour_graph(self, colour) -> Graph:
        return Graph.from_adjacency(self._col == _colour_code(colour))

    def edges_of(self, colour) -> list[tuple[int, int]]:
        return self.colour_graph(colour).edges()

    def items(self):
        return [(u, v, int(self._col[u, v])) for u, v in self.graph.edges()]

    def swapped(self) -> "EdgeColouring":
        mat = np.where(self._col >= 0, 1 - self._col, -1).astype(np.int8)
        return EdgeColouring.from_matrix(self.graph, mat)

    def restrict(self, sub: Graph) -> "EdgeColouring":
        """Restriction to a spanning subgraph ``sub`` of ``self.graph``."""
        if sub.n != self.graph.n or (sub.adjacency & ~self.graph.adjacency).any():
            raise InvalidParameter("not a spanning subgraph")
        return EdgeColouring.from_matrix(sub, np.where(sub.adjacency, self._col, -1))

    def __eq__(self, other):
        return (
            isinstance(other, EdgeColouring)
            and self.graph == other.graph
            and bool((self._col == other._col).all())
        )

    def __repr__(self):
        red = int(np.count_nonzero(self._col == RED)) // 2
        return f"EdgeColouring(n={self.graph.n}, red={red}, blue={self.graph.m - red})"

    def to_dict(self) -> dict:
        return {"n": self.graph.n, "edges": [[u, v, _NAMES[c]] for u, v, c in self.items()]}

    @classmethod
    def from_dict(cls, data: dict) -> "EdgeColouring":
        try:
            n = int(data["n"])
            triples = [(int(u), int(v), str(c)) for u, v, c in data["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidParameter(f"malformed colouring record: {exc}") from exc
        graph = Graph(n, [(u, v) for u, v, _ in triples])
        return cls(graph, {(u, v): c for u, v, c in triples})


def read_colouring(path) -> EdgeColouring:
    return EdgeColouring.from_dict(json.loads(Path(path).read_text()))


def write_colouring(c: EdgeColouring, path) -> None:
    Path(path).write_text(json.dumps(c.to_dict()) + "\n")


def count_monochromatic(g: Graph, c: EdgeColouring, t: int, colour, threads: int = 1) -> int:
    """Number of ``t``-cliques of ``g`` whose edges all carry ``colour``."""
    if c.graph != g:
        raise InvalidParameter("colouring is defined on a different graph")
    return count_cliques(c.colour_graph(colour), t, threads)


def find_monochromatic(c: EdgeColouring, t: int, colour):
    return find_clique(c.colour_graph(colour), t)


@dataclass(frozen=True)
class CriticalColouring:
    """Colouring of ``K_order`` with no red ``K_red_k`` and no blue ``K_blue_k``.

    Construction raises :class:`ColouringRejected` when the colouring fails
    that test, carrying one offending clique.
    """

    order: int
    red_k: int
    blue_k: int
    colouring: EdgeColouring

    def __post_init__(self):
        if self.red_k < 2 or self.blue_k < 2:
            raise InvalidParameter("clique sizes must be >= 2")
        if self.colouring.graph != Graph.complete(self.order):
            raise InvalidParameter(f"base colouring must live on K_{self.order}")
        for size, colour in ((self.red_k, RED), (self.blue_k, BLUE)):
            witness = find_monochromatic(self.colouring, size, colour)
            if witness is not None:
                name = "red" if colour == RED else "blue"
                raise ColouringRejected(
                    f"{name} K_{size} on {witness}", witness=witness, colour=name
                )

    def to_dict(self) -> dict:
        return {**self.colouring.to_dict(), "red_k": self.red_k, "blue_k": self.blue_k}


def _complete_colouring(order, is_red) -> EdgeColouring:
    k = Graph.complete(order)
    return EdgeColouring(k, {(u, v): RED if is_red(u, v) else BLUE for u, v in k.edges()})


def builtin_critical(k: int) -> CriticalColouring:
    """Classical colourings of ``K_{R(k)-1}`` with no monochromatic ``K_k``, for k = 3, 4.

    k = 3: red 5-cycle on K_5.  k = 4: Paley colouring of K_17.
    """
    if k == 3:
        c = _complete_colouring(5, lambda u, v: (v - u) % 5 in (1, 4))
        return CriticalColouring(5, 3, 3, c)
    if k == 4:
        c = _complete_colouring(17, lambda u, v: (u - v) % 17 in PALEY17_RESIDUES)
        return CriticalColouring(17, 4, 4, c)
    raise Unsupported(f"no built-in critical colouring for k={k}; supply a colouring file")


def load_critical(path) -> CriticalColouring:
    try:
        data = json.loads(Path(path).read_text())
        red_k, blue_k = int(data["red_k"]), int(data["blue_k"])
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InvalidParameter(f"{path}: cannot parse critical colouring ({exc})") from exc
    c = EdgeColouring.from_dict(data)
    return CriticalColouring(c.graph.n, red_k, blue_k, c)


def save_critical(cc: CriticalColouring, path) -> None:
    Path(path).write_text(json.dumps(cc.to_dict()) + "\n")


def build_witness_colouring(
    h0: Hypergraph, base: CriticalColouring, seed: int | None = None
) -> EdgeColouring:
    """Tile the base colouring over every hyperedge of a linear hypergraph.

    Hyperedge vertices ``e_0 < ... < e_{s-1}`` map to base vertices ``0..s-1``;
    with ``seed`` set, each hyperedge instead gets its own random bijection.
    """
    if base.order != h0.s:
        raise InvalidParameter(f"base order {base.order} != uniformity {h0.s}")
    ok, pair = is_linear(h0)
    if not ok:
        raise IllDefinedColouring(f"hyperedges {pair[0]} and {pair[1]} share two vertices")
    rng = np.random.default_rng(seed) if seed is not None else None
    bmat = base.colouring.matrix
    mat = np.full((h0.n, h0.n), -1, dtype=np.int8)
    assigned = 0
    for e in h0.edges:
        verts = np.array(e, dtype=np.int64)
        if rng is not None:
            verts = verts[rng.permutation(len(verts))]
        block = np.ix_(verts, verts)
        if (mat[block] >= 0).any():  # pragma: no cover - excluded by linearity
            raise IllDefinedColouring(f"hyperedge {e} recolours an edge")
        mat[block] = bmat
        assigned += len(e) * (len(e) - 1) // 2
    graph = Graph.from_adjacency(mat >= 0)
    if assigned != graph.m:  # pragma: no cover
        raise IllDefinedColouring("edge assignment count mismatch")
    return EdgeColouring.from_matrix(graph, mat)


def colour_assignment_counts(h0: Hypergraph) -> dict[tuple[int, int], int]:
    """How many hyperedges would colour each primal edge (all ones iff linear)."""
    counts: dict[tuple[int, int], int] = {}
    for e in h0.edges:
        for pair in combinations(e, 2):
            counts[pair] = counts.get(pair, 0) + 1
    return counts
