"""Command-line front end.

Exit codes: 0 clean, 1 certificate violated, 2 inconclusive (budget), 3 invalid input.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from math import comb
from pathlib import Path

from . import analysis, arrowing
from .colouring import load_critical, read_colouring
from .conformal import prune_to_conformal
from .core import Graph, read_graph, read_hypergraph, write_hypergraph
from .errors import ArrowgraphError, BudgetExceeded
from .pipeline import audit, construct, write_artifacts
from .sampler import DEFAULT_BUDGET, SampleConfig, sample_hypergraph

EXIT_OK, EXIT_VIOLATED, EXIT_INCONCLUSIVE, EXIT_INVALID = 0, 1, 2, 3

PATTERNS = {
    "edge": [(0, 1)],
    "path": [(0, 1), (1, 2)],
    "triangle": [(0, 1), (1, 2), (0, 2)],
}


def _emit(args, payload: dict, text: str | None = None) -> None:
    if args.format == "text" and text is not None:
        print(text)
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))


def _sample_config(args) -> SampleConfig:
    if args.config:
        data = json.loads(Path(args.config).read_text())
        return SampleConfig.from_dict(data)
    data = {"n": args.n, "s": args.s, "seed": args.seed}
    if args.p is not None:
        data["p"] = args.p
    if args.expected_edges is not None:
        data["expected_edges"] = args.expected_edges
    return SampleConfig.from_dict(data)


def _graph_arg(args) -> Graph:
    if args.complete is not None:
        return Graph.complete(args.complete)
    if args.graph:
        return read_graph(args.graph)
    raise ArrowgraphError("give --graph FILE or --complete N")


def cmd_construct(args) -> int:
    base = load_critical(args.colouring) if args.colouring else None
    c = construct(
        args.n,
        args.k,
        s=args.s,
        p=args.p,
        expected_edges=args.expected_edges,
        seed=args.seed,
        base=base,
        threads=args.threads,
        budget=args.budget,
    )
    write_artifacts(c, args.out)
    cert = c.report["certificate"]
    _emit(
        args,
        c.report,
        f"sampled {c.report['sampled_edges']} -> kept {c.prune.surviving}; "
        f"G: n={c.graph.n} m={c.graph.m}; mono red/blue = "
        f"{cert['mono_red_Kk']}/{cert['mono_blue_Kk']}; contains K_s: {cert['contains_Ks']}",
    )
    for w in c.report["warnings"]:
        logging.warning(w)
    return EXIT_OK if c.clean else EXIT_VIOLATED


def cmd_sample(args) -> int:
    h = sample_hypergraph(_sample_config(args), budget=args.budget, threads=args.threads)
    if args.out:
        write_hypergraph(h, args.out)
    else:
        print(json.dumps(h.to_dict()))
    return EXIT_OK


def cmd_prune(args) -> int:
    h = read_hypergraph(args.input)
    h0, rep = prune_to_conformal(h, args.k, args.threads)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        write_hypergraph(h0, out / "pruned.json")
        rep.write(out / "prune.json")
    _emit(args, rep.to_dict(), f"kept {rep.surviving} of {len(h)} hyperedges")
    return EXIT_OK


def cmd_arrow(args) -> int:
    g = _graph_arg(args)
    res = arrowing.decide_arrowing(g, args.a, args.b, args.budget)
    _emit(args, res.to_dict(), f"{res.decision or 'inconclusive'} (nodes {res.nodes_explored})")
    return EXIT_INCONCLUSIVE if res.inconclusive else EXIT_OK


def cmd_cnf(args) -> int:
    g = _graph_arg(args)
    nvars, nclauses = arrowing.export_cnf(g, args.a, args.b, args.out)
    _emit(args, {"variables": nvars, "clauses": nclauses, "path": str(args.out)},
          f"p cnf {nvars} {nclauses} -> {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.dir:
        res = audit(args.dir, args.threads)
        _emit(args, res, "ok" if res["ok"] else "\n".join(res["problems"]))
        return EXIT_OK if res["ok"] else EXIT_VIOLATED
    g = read_graph(args.graph)
    c = read_colouring(args.colouring_file)
    ok = arrowing.verify_colouring(g, c, args.a, args.b)
    _emit(args, {"valid": ok}, "valid" if ok else "invalid")
    return EXIT_OK if ok else EXIT_VIOLATED


def cmd_oracle_alpha(args) -> int:
    value, cover = analysis.min_alpha_bruteforce(args.k)
    covers = analysis.nontrivial_pair_covers(args.k)
    argmins = analysis.alpha_argmins(args.k)
    payload = {
        "k": args.k,
        "min_alpha": str(value),
        "covers_enumerated": len(covers),
        "argmins": [[list(p) for p in c.parts] for c in argmins],
        "claim_holds": all(analysis.alpha(c, args.k) >= args.k - 2 for c in covers),
    }
    _emit(args, payload, f"min alpha = {value} over {len(covers)} covers; k-2 = {args.k - 2}")
    return EXIT_OK if payload["claim_holds"] else EXIT_VIOLATED


def cmd_mc(args) -> int:
    n, s, trials, seed = args.n, args.s, args.trials, args.seed
    if n is None or s is None or (args.p is None and args.expected_edges is None):
        raise ArrowgraphError("mc needs --n, --s and one of --p / --expected-edges")
    p = args.p if args.p is not None else args.expected_edges / comb(n, s)
    if args.kind == "subset":
        pattern = analysis.SubgraphPattern.from_edges(PATTERNS[args.pattern])
        res = analysis.mc_subset_probability(pattern, n, s, p, trials, seed)
        payload = {"kind": "subset", "pattern": args.pattern, "value": res.frequency,
                   "bound": res.bound, "trials": trials, "sigma": res.stderr}
    elif args.kind == "xc":
        cover = analysis.PairCover.perfect(range(args.k))
        res = analysis.mc_X_C(n, s, p, cover, trials, seed)
        payload = {"kind": "xc", "value": res.mean, "expected": analysis.expected_X_C(n, s, args.k, p, cover),
                   "trials": trials, "sigma": res.stderr}
    else:
        res = analysis.mc_Y(n, s, p, trials, seed)
        payload = {"kind": "y", "value": res.mean, "bound": analysis.expected_Y_bound(n, s, p),
                   "expected": analysis.expected_Y(n, s, p), "trials": trials, "sigma": res.stderr}
    _emit(args, payload)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors are invalid input, not the argparse default of 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--budget", type=int, default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--n", type=int)
    sampling.add_argument("--s", type=int)
    group = sampling.add_mutually_exclusive_group()
    group.add_argument("--p", type=float)
    group.add_argument("--expected-edges", type=float)
    sampling.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="arrowgraph", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common, sampling], help="run the full construction")
    p.add_argument("--k", type=int)
    p.add_argument("--colouring", help="critical colouring JSON replacing the built-in base")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("sample", parents=[common, sampling], help="sample H_s(n, p)")
    p.add_argument("--config", help="JSON file with n, s, p | expected_edges, seed")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("prune", parents=[common], help="prune to linear k-conformal")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_prune)

    for name, fn, help_ in (("arrow", cmd_arrow, "decide G -> (K_a, K_b)"),
                            ("cnf", cmd_cnf, "export the arrowing CNF")):
        p = sub.add_parser(name, parents=[common], help=help_)
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--graph")
        src.add_argument("--complete", type=int)
        p.add_argument("--a", type=int, required=True)
        p.add_argument("--b", type=int, required=True)
        if name == "cnf":
            p.add_argument("--out", required=True)
        p.set_defaults(func=fn)

    p = sub.add_parser("verify", parents=[common], help="audit a construct output directory")
    p.add_argument("dir", nargs="?")
    p.add_argument("--graph")
    p.add_argument("--colouring-file")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle-alpha", parents=[common], help="brute-force minimum of alpha")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_oracle_alpha)

    p = sub.add_parser("mc", parents=[common, sampling], help="Monte Carlo oracles")
    p.add_argument("--kind", choices=("subset", "xc", "y"), required=True)
    p.add_argument("--pattern", choices=sorted(PATTERNS), default="edge")
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--trials", type=int, default=1000)
    p.set_defaults(func=cmd_mc)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    if args.budget is None:
        args.budget = arrowing.DEFAULT_BUDGET if args.command == "arrow" else DEFAULT_BUDGET
    if args.command == "verify" and not args.dir and not (args.graph and args.colouring_file):
        parser.error("verify needs an artifact directory or --graph with --colouring-file")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        logging.error("%s", exc)
        return EXIT_INCONCLUSIVE
    except (ArrowgraphError, OSError, ValueError, KeyError) as exc:
        logging.error("%s", exc)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
