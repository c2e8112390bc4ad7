"""Command-line entry point: ``cliquepath <command> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from .cliques import clique_profile
from .constructions import (build_clique_plus_pendants, build_disjoint_cliques, build_hnkc,
                            build_shared_vertex_cliques)
from .errors import BudgetExceeded, ConvergenceError, DomainError, ParseError
from .graph import connectivity_profile, disintegrate, parse_edge_list, read_graph6_lines, to_graph6
from .harness import (ClassFilter, SuiteConfig, TheoremGrid, parse_grid, parse_source, run_suite,
                      search_counterexamples, sidecar_path)
from .paths import path_cycle_profile
from .records import Theorem
from .spectral import DEFAULT_TOL, spectral_radius


def _read_graphs(args):
    stream = sys.stdin if getattr(args, "input", "-") in (None, "-") else open(args.input)
    with stream:
        if getattr(args, "format", "g6") == "edgelist":
            return [parse_edge_list(stream.read())]
        return list(read_graph6_lines(stream))


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def cmd_analyze(args) -> int:
    for g in _read_graphs(args):
        connected, two = connectivity_profile(g)
        out = {"graph6": to_graph6(g), "n": g.n, "m": g.m,
               "connected": connected, "two_connected": two,
               "min_degree": g.min_degree, "cliques": clique_profile(g).to_json()}
        try:
            out["paths"] = path_cycle_profile(g).to_json()
        except BudgetExceeded as exc:
            out["paths"] = {"error": str(exc)}
        if g.n:
            try:
                out["spectral"] = spectral_radius(g).to_json()
            except ConvergenceError as exc:
                out["spectral"] = {"error": str(exc)}
        _emit(out)
    return 0


def cmd_construct(args) -> int:
    if args.family == "hnkc":
        g = build_hnkc(args.n, args.k, args.c)
    elif args.family == "disjoint-cliques":
        g = build_disjoint_cliques(args.n, args.l)
    elif args.family == "shared-cliques":
        g = build_shared_vertex_cliques(args.n, args.l)
    else:
        g = build_clique_plus_pendants(args.n)
    print(to_graph6(g))
    return 0


def _relax(values: Sequence[str] | None) -> frozenset[str]:
    out = set()
    for v in values or ():
        out.update(x.strip() for x in v.split(",") if x.strip())
    return frozenset(out)


def cmd_verify(args) -> int:
    grid = parse_grid(args.params)
    theorems = [TheoremGrid(Theorem.parse(t), grid, _relax(args.relax)) for t in args.theorem]
    cfg = SuiteConfig(theorems, parse_source(args.source), ClassFilter.parse(args.graph_class),
                      out=args.out, workers=args.workers)
    report = run_suite(cfg)
    for name, c in sorted(report.counters.items()):
        print(f"{name}: checked={c['checked']} premise_met={c['premise_met']} holds={c['holds']} "
              f"tight={c['tight']} violations={c['violations']} budget_exceeded={c['budget_exceeded']}",
              file=sys.stderr)
    if report.violations:
        print(f"violations written to {sidecar_path(args.out)}", file=sys.stderr)
    return report.exit_status


def cmd_disintegrate(args) -> int:
    for g in _read_graphs(args):
        h, _ = disintegrate(g, args.alpha)
        print(to_graph6(h))
    return 0


def cmd_spectral(args) -> int:
    for g in _read_graphs(args):
        _emit({"graph6": to_graph6(g), **spectral_radius(g, args.tol).to_json()})
    return 0


def cmd_search(args) -> int:
    certs = search_counterexamples(Theorem.parse(args.theorem), parse_grid(args.params),
                                   parse_source(args.source), args.budget, _relax(args.relax),
                                   ClassFilter.parse(args.graph_class))
    print(json.dumps(certs, indent=2, sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cliquepath", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="clique, path/cycle and spectral profile of input graphs")
    p.add_argument("--format", choices=["g6", "edgelist"], default="g6")
    p.add_argument("--input", default="-", help="file path, or - for stdin")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="emit an extremal construction as graph6")
    fam = p.add_subparsers(dest="family", required=True)
    f = fam.add_parser("hnkc")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--c", type=int, required=True)
    for name in ("disjoint-cliques", "shared-cliques"):
        f = fam.add_parser(name)
        f.add_argument("--n", type=int, required=True)
        f.add_argument("--l", type=int, required=True)
    f = fam.add_parser("clique-pendants")
    f.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="sweep theorem checks over a graph source")
    p.add_argument("--theorem", action="append", required=True)
    p.add_argument("--params", default="", help="grid such as k=2..4,c=5|7,s=2")
    p.add_argument("--source", required=True,
                   help="builtin:N | g6:FILE | gnp:N,P,COUNT,SEED | construct:FAMILY:K=V,...")
    p.add_argument("--class", dest="graph_class", default="all")
    p.add_argument("--relax", action="append")
    p.add_argument("--out", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("disintegrate", help="repeatedly delete vertices of degree <= alpha")
    p.add_argument("--alpha", type=int, required=True)
    p.set_defaults(func=cmd_disintegrate)

    p = sub.add_parser("spectral", help="spectral radius of graph6 graphs on stdin")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_spectral)

    p = sub.add_parser("search", help="look for graphs violating a (relaxed) theorem")
    p.add_argument("--theorem", required=True)
    p.add_argument("--params", default="")
    p.add_argument("--relax", action="append")
    p.add_argument("--source", required=True)
    p.add_argument("--class", dest="graph_class", default="all")
    p.add_argument("--budget", type=int, default=10)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (ParseError, DomainError, BudgetExceeded, ConvergenceError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
