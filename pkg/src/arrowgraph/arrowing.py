"""Exhaustive decision of G -> (K_a, K_b) and its DIMACS CNF encoding."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

import numpy as np

from . import kernels
from .colouring import BLUE, RED, EdgeColouring, find_monochromatic
from .core import Graph, clique_array, contains_clique
from .errors import InvalidParameter

ARROWS = "Arrows"
NOT_ARROWS = "NotArrows"
DEFAULT_BUDGET = 10**8


@dataclass
class ArrowResult:
    """Outcome of :func:`decide_arrowing`.

    ``decision`` is ``None`` when the node budget ran out; such a result is
    inconclusive and carries ``complete=False``.
    """

    decision: str | None
    witness: EdgeColouring | None
    nodes_explored: int
    complete: bool

    @property
    def inconclusive(self) -> bool:
        return self.decision is None

    def to_dict(self) -> dict:
        return {
            "decision": self.decision,
            "complete": self.complete,
            "nodes_explored": self.nodes_explored,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


def degeneracy_order(g: Graph) -> list[int]:
    """Reverse of the smallest-last elimination order (ties: smallest label first)."""
    deg = g.adjacency.sum(axis=1).astype(np.int64)
    removed = np.zeros(g.n, dtype=bool)
    elim = []
    for _ in range(g.n):
        masked = np.where(removed, np.iinfo(np.int64).max, deg)
        v = int(np.argmin(masked))
        elim.append(v)
        removed[v] = True
        deg -= g.adjacency[v]
    return elim[::-1]


def search_edge_order(g: Graph) -> list[tuple[int, int]]:
    pos = {v: i for i, v in enumerate(degeneracy_order(g))}
    return sorted(g.edges(), key=lambda e: (max(pos[e[0]], pos[e[1]]), min(pos[e[0]], pos[e[1]])))


def _attach_cliques(g: Graph, t: int, eidx: np.ndarray, m: int):
    """CSR lists: for each edge position, the other edges of every t-clique it completes."""
    width = t * (t - 1) // 2
    cliques = clique_array(g, t)
    if cliques.shape[0] == 0:
        return np.zeros(m + 1, dtype=np.int64), np.zeros((0, max(width - 1, 0)), dtype=np.int64)
    pairs = list(combinations(range(t), 2))
    pos = np.stack([eidx[cliques[:, i], cliques[:, j]] for i, j in pairs], axis=1)
    pos.sort(axis=1)
    last = pos[:, -1]
    order = np.argsort(last, kind="stable")
    others = np.ascontiguousarray(pos[order, :-1])
    ptr = np.zeros(m + 1, dtype=np.int64)
    np.cumsum(np.bincount(last, minlength=m), out=ptr[1:])
    return ptr, others


def decide_arrowing(g: Graph, a: int, b: int, budget: int = DEFAULT_BUDGET) -> ArrowResult:
    """Decide whether every red/blue colouring of ``g`` has a red ``K_a`` or a blue ``K_b``.

    Backtracks over edges in degeneracy order, red before blue, checking a
    clique once its last edge is coloured.  The first witness found is thus
    the lexicographically least one for that edge order.  ``Arrows`` is only
    returned after exhausting the search; running out of ``budget`` nodes
    yields an inconclusive result.
    """
    if a < 2 or b < 2:
        raise InvalidParameter(f"clique sizes must be >= 2, got ({a}, {b})")
    # With a blue K_2 forbidden, only the all-red colouring remains (and symmetrically).
    if b == 2 or a == 2:
        size, colour = (a, RED) if b == 2 else (b, BLUE)
        if contains_clique(g, size):
            return ArrowResult(ARROWS, None, 0, True)
        return ArrowResult(NOT_ARROWS, EdgeColouring.uniform(g, colour), 0, True)

    order = search_edge_order(g)
    m = len(order)
    eidx = np.full((g.n, g.n), -1, dtype=np.int64)
    for i, (u, v) in enumerate(order):
        eidx[u, v] = eidx[v, u] = i
    red_ptr, red_idx = _attach_cliques(g, a, eidx, m)
    blue_ptr, blue_idx = _attach_cliques(g, b, eidx, m)
    col = np.full(max(m, 1), -1, dtype=np.int8)
    status, nodes = kernels.arrow_search(m, red_ptr, red_idx, blue_ptr, blue_idx, budget, col)
    nodes = int(nodes)
    if status == 0:
        return ArrowResult(ARROWS, None, nodes, True)
    if status < 0:
        return ArrowResult(None, None, min(nodes, budget), False)
    witness = EdgeColouring(g, {e: int(col[i]) for i, e in enumerate(order)})
    if not verify_colouring(g, witness, a, b):  # pragma: no cover
        raise AssertionError("search returned an invalid witness")
    return ArrowResult(NOT_ARROWS, witness, nodes, True)


def verify_colouring(g: Graph, c: EdgeColouring, a: int, b: int) -> bool:
    """True iff ``c`` has no red ``K_a`` and no blue ``K_b``."""
    if c.graph != g:
        raise InvalidParameter("colouring is not total on the edges of the graph")
    return find_monochromatic(c, a, RED) is None and find_monochromatic(c, b, BLUE) is None


def cnf_clauses(g: Graph, a: int, b: int) -> tuple[int, list[list[int]]]:
    """Variables are edges in lexicographic order (1-based, true = red)."""
    if a < 3 or b < 3:
        raise InvalidParameter(f"CNF export needs a, b >= 3, got ({a}, {b})")
    edges = g.edges()
    var = {e: i + 1 for i, e in enumerate(edges)}
    clauses = []
    for size, sign in ((a, -1), (b, 1)):
        for q in clique_array(g, size).tolist():
            clauses.append([sign * var[p] for p in combinations(q, 2)])
    return len(edges), clauses


def export_cnf(g: Graph, a: int, b: int, out) -> tuple[int, int]:
    """Write DIMACS CNF, satisfiable iff ``g`` does not arrow ``(K_a, K_b)``."""
    nvars, clauses = cnf_clauses(g, a, b)
    lines = [f"c arrowing G -> (K_{a}, K_{b}); n={g.n}; variable i = edge i, true = red",
             f"p cnf {nvars} {len(clauses)}"]
    lines += [" ".join(map(str, cl)) + " 0" for cl in clauses]
    Path(out).write_text("\n".join(lines) + "\n")
    return nvars, len(clauses)


def decode_model(g: Graph, text) -> EdgeColouring:
    """Colouring from a solver model: ``v``-lines or bare signed literals."""
    if not isinstance(text, str):
        text = " ".join(map(str, text))
    lits = []
    for line in text.splitlines():
        tokens = line.split()
        if not tokens or tokens[0] in ("c", "s"):
            continue
        if tokens[0] == "v":
            tokens = tokens[1:]
        lits.extend(int(t) for t in tokens)
    value = {abs(x): x > 0 for x in lits if x != 0}
    edges = g.edges()
    missing = [i + 1 for i in range(len(edges)) if i + 1 not in value]
    if missing:
        raise InvalidParameter(f"model does not assign variables {missing[:5]}")
    return EdgeColouring(g, {e: RED if value[i + 1] else BLUE for i, e in enumerate(edges)})
