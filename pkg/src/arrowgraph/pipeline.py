"""End-to-end construction: sample, prune, take the primal graph, colour, certify."""
from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path

from .arrowing import decide_arrowing
from .colouring import (
    BLUE,
    RED,
    CriticalColouring,
    EdgeColouring,
    build_witness_colouring,
    builtin_critical,
    count_monochromatic,
    read_colouring,
    write_colouring,
)
from .conformal import PruneReport, enumerate_noncovered_cliques, prune_to_conformal
from .core import (
    Graph,
    Hypergraph,
    contains_clique,
    count_cliques,
    is_linear,
    primal_graph,
    read_graph,
    read_hypergraph,
    write_graph,
    write_hypergraph,
)
from .errors import InvalidParameter
from .sampler import DEFAULT_BUDGET, SampleConfig, p_for_expected_edges, sample_hypergraph

log = logging.getLogger(__name__)

ARTIFACTS = {
    "hypergraph": "hypergraph.json",
    "pruned": "pruned.json",
    "prune": "prune.json",
    "graph": "graph.txt",
    "colouring": "colouring.json",
    "report": "report.json",
}


@dataclass
class Construction:
    report: dict
    hypergraph: Hypergraph
    pruned: Hypergraph
    prune: PruneReport
    graph: Graph
    colouring: EdgeColouring

    @property
    def clean(self) -> bool:
        cert = self.report["certificate"]
        return cert["mono_red_Kk"] == 0 and cert["mono_blue_Kk"] == 0


def certificate(graph: Graph, colouring: EdgeColouring, s: int, red_k: int, blue_k: int, threads=1) -> dict:
    return {
        "mono_red_Kk": count_monochromatic(graph, colouring, red_k, RED, threads),
        "mono_blue_Kk": count_monochromatic(graph, colouring, blue_k, BLUE, threads),
        "contains_Ks": contains_clique(graph, s),
    }


def construct(
    n: int,
    k: int | None = None,
    *,
    s: int | None = None,
    p: float | None = None,
    expected_edges: float | None = None,
    seed: int = 0,
    base: CriticalColouring | None = None,
    threads: int = 1,
    budget: int = DEFAULT_BUDGET,
) -> Construction:
    """Run the construction for ``k`` (3 or 4 built in) or a supplied base colouring.

    The hypergraph is pruned to be linear and ``min(red_k, blue_k)``-conformal;
    for linear hypergraphs this also makes it conformal for the larger size.
    """
    if base is None:
        if k is None:
            raise InvalidParameter("give k or a base colouring")
        base = builtin_critical(k)
    elif k is not None and k != min(base.red_k, base.blue_k):
        raise InvalidParameter(
            f"k={k} does not match the base colouring (red_k={base.red_k}, blue_k={base.blue_k})"
        )
    k = min(base.red_k, base.blue_k)
    if s is None:
        s = base.order
    if s != base.order:
        raise InvalidParameter(f"s={s} must equal the base colouring order {base.order}")
    if (p is None) == (expected_edges is None):
        raise InvalidParameter("give exactly one of p and expected_edges")
    if p is None:
        p = p_for_expected_edges(n, s, expected_edges)

    h = sample_hypergraph(SampleConfig(n, s, p, seed), budget=budget, threads=threads)
    h0, prune = prune_to_conformal(h, k, threads)
    g = primal_graph(h0)
    colouring = build_witness_colouring(h0, base)

    warnings = []
    if not h0.edges:
        warnings.append("pruned hypergraph is empty; the instance is vacuous")
        log.warning("pruned hypergraph is empty; the instance is vacuous")
    report = {
        "config": {"n": n, "s": s, "k": k, "p": p, "expected_edges": expected_edges, "seed": seed},
        "base": {"order": base.order, "red_k": base.red_k, "blue_k": base.blue_k},
        "sampled_edges": len(h),
        "prune": prune.to_dict(),
        "primal": {
            "n": g.n,
            "m": g.m,
            "clique_counts": {str(t): count_cliques(g, t, threads) for t in range(1, s + 1)},
        },
        "certificate": certificate(g, colouring, s, base.red_k, base.blue_k, threads),
        "warnings": warnings,
    }
    if k == 3 and base.red_k == base.blue_k:
        res = decide_arrowing(g, s, k - 1)
        report["arrow_check"] = {
            "target": [s, k - 1],
            "decision": res.decision,
            "complete": res.complete,
        }
    return Construction(report, h, h0, prune, g, colouring)


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def write_artifacts(c: Construction, out) -> Path:
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    write_hypergraph(c.hypergraph, out / ARTIFACTS["hypergraph"])
    write_hypergraph(c.pruned, out / ARTIFACTS["pruned"])
    c.prune.write(out / ARTIFACTS["prune"])
    write_graph(c.graph, out / ARTIFACTS["graph"])
    write_colouring(c.colouring, out / ARTIFACTS["colouring"])
    (out / ARTIFACTS["report"]).write_text(dump_report(c.report))
    return out


def audit(out, threads: int = 1) -> dict:
    """Recompute every certificate figure from the artifact files in ``out``.

    Returns ``{"ok": bool, "problems": [...], "recomputed": {...}}``; ``ok``
    means the files are mutually consistent, match the stored report and the
    certificate is clean.
    """
    out = Path(out)
    report = json.loads((out / ARTIFACTS["report"]).read_text())
    h0 = read_hypergraph(out / ARTIFACTS["pruned"])
    g = read_graph(out / ARTIFACTS["graph"])
    colouring = read_colouring(out / ARTIFACTS["colouring"])
    red_k, blue_k = report["base"]["red_k"], report["base"]["blue_k"]
    problems = []
    if primal_graph(h0) != g:
        problems.append("graph is not the primal graph of the pruned hypergraph")
    if not is_linear(h0)[0]:
        problems.append("pruned hypergraph is not linear")
    if h0.edges and enumerate_noncovered_cliques(h0, min(red_k, blue_k)):
        problems.append("pruned hypergraph is not conformal")
    if colouring.graph.n != g.n:
        problems.append("colouring and graph disagree on the vertex count")
        colouring = None
    elif colouring.graph != g:
        problems.append("colouring is not defined on exactly the graph's edges")
    recomputed = {}
    if colouring is not None and colouring.graph == g:
        recomputed = certificate(g, colouring, h0.s, red_k, blue_k, threads)
        if recomputed != report["certificate"]:
            problems.append(f"certificate mismatch: stored {report['certificate']}, recomputed {recomputed}")
        if recomputed["mono_red_Kk"] or recomputed["mono_blue_Kk"]:
            problems.append("witness colouring has a monochromatic clique")
    return {"ok": not problems, "problems": problems, "recomputed": recomputed}
