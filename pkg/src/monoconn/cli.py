"""Command-line interface: compute, verify, construct, check, survey, hunt.

Output is JSON lines (one record per graph).  Exit status is 0 on success,
1 when a corpus check produced a "violated" verdict, 2 on malformed input.
The MONO_MAX_EXACT_N environment variable overrides the exact-solver guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterable, Iterator

from .coloring import (
    EdgeColoring,
    TotalColoring,
    VertexColoring,
    coloring_from_json,
    coloring_to_json,
    verify_mc,
    verify_mvc,
    verify_tmc,
)
from .constructions import (
    complete_tmc_coloring,
    max_leaf_tmc_coloring,
    multipartite_tmc_coloring,
    wheel_tmc_coloring,
)
from .graphs import (
    Graph,
    GraphFormatError,
    iter_graph6_lines,
    parse_edgelist,
    parse_graph6,
    to_graph6,
)
from .harness import (
    HUNT_TARGETS,
    builtin_corpus,
    check_all,
    records_to_csv,
    survey_random,
)
from .maxleaf import max_leaf_exact
from .solvers import SolverRangeError, mc_exact, mvc_exact, tmc_exact


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _load_graphs(spec: str, literal: bool) -> Iterator[Graph]:
    """Load one or more graphs from a path, '-', or a literal graph6 string.

    Files whose first line looks like an 'n m' header parse as a single
    edge-list graph; anything else parses as graph6, one graph per line.
    """
    if literal:
        yield parse_graph6(spec)
        return
    text = _read_text(spec)
    first = next((ln for ln in text.splitlines() if ln.strip()), "")
    parts = first.split()
    if len(parts) == 2 and all(p.lstrip("-").isdigit() for p in parts):
        yield parse_edgelist(text)
        return
    yield from iter_graph6_lines(text.splitlines())


def _corpus(spec: str) -> Iterable[Graph]:
    if spec.startswith("builtin:"):
        arg = spec.split(":", 1)[1]
        arg = arg.replace("n<=", "").replace("n=", "")
        return builtin_corpus(int(arg))
    return _load_graphs(spec, literal=False)


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def cmd_compute(args: argparse.Namespace) -> int:
    for g in _load_graphs(args.input, args.literal):
        rec: dict = {"graph6": to_graph6(g), "n": g.n, "m": g.m}
        wanted = ["tmc", "mc", "mvc", "l"] if args.invariant == "all" else [args.invariant]
        for inv in wanted:
            if inv == "l":
                res = max_leaf_exact(g)
                rec["l"] = res.leaf_count
                if args.witness:
                    rec["l_tree"] = [list(e) for e in res.tree]
                continue
            solver = {"tmc": tmc_exact, "mc": mc_exact, "mvc": mvc_exact}[inv]
            rep = solver(g)
            rec[inv] = rep.value
            rec[f"{inv}_method"] = rep.method
            if args.witness:
                rec[f"{inv}_witness"] = json.loads(coloring_to_json(rep.witness))
        _emit(rec)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    coloring = coloring_from_json(_read_text(args.coloring))
    for g in _load_graphs(args.graph, args.literal):
        if isinstance(coloring, TotalColoring):
            kind, (ok, pair) = "tmc", verify_tmc(g, coloring)
        elif isinstance(coloring, EdgeColoring):
            kind, (ok, pair) = "mc", verify_mc(g, coloring)
        else:
            kind, (ok, pair) = "mvc", verify_mvc(g, coloring)
        _emit(
            {
                "graph6": to_graph6(g),
                "kind": kind,
                "valid": ok,
                "uncovered_pair": list(pair) if pair else None,
                "colors": coloring.color_count,
            }
        )
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    if args.family == "wheel":
        g, tc = wheel_tmc_coloring(args.order)
    elif args.family == "complete":
        g, tc = complete_tmc_coloring(args.order)
    elif args.family == "multipartite":
        sizes = [int(s) for s in args.sizes.split(",")]
        g, tc = multipartite_tmc_coloring(sizes)
    elif args.family == "tree":
        graphs = list(_load_graphs(args.graph, args.literal))
        if len(graphs) != 1:
            raise GraphFormatError("construct --family tree needs exactly one input graph")
        g = graphs[0]
        tc = max_leaf_tmc_coloring(g)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(args.family)
    _emit(
        {
            "graph6": to_graph6(g),
            "n": g.n,
            "m": g.m,
            "colors": tc.color_count,
            "coloring": json.loads(coloring_to_json(tc)),
        }
    )
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    violations = 0
    records = []
    for g in _corpus(args.corpus):
        rec = check_all(g)
        records.append(rec)
        bad = rec.violated()
        if bad:
            violations += 1
        sys.stdout.write(rec.to_json() + "\n")
    if args.csv:
        with open(args.csv, "w", encoding="ascii") as fh:
            fh.write(records_to_csv(records))
    sys.stderr.write(
        f"checked {len(records)} graphs, {violations} with violated verdicts\n"
    )
    return 1 if violations else 0


def cmd_survey(args: argparse.Namespace) -> int:
    rec = survey_random(args.n, args.p, args.trials, args.seed)
    sys.stdout.write(rec.to_json() + "\n")
    return 0


def cmd_hunt(args: argparse.Namespace) -> int:
    hunter = HUNT_TARGETS[args.target]
    findings = hunter(_corpus(args.corpus))
    for f in findings:
        sys.stdout.write(f.to_json() + "\n")
    sys.stderr.write(f"{len(findings)} finding(s) for target {args.target}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="monoconn",
        description="Monochromatic connectivity invariants: solvers, colorings, corpus checks.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute invariants of input graphs")
    p.add_argument("input", help="path to a graph6/edge-list file, or '-' for stdin")
    p.add_argument("--literal", action="store_true", help="treat INPUT as one literal graph6 string")
    p.add_argument("--invariant", choices=["tmc", "mc", "mvc", "l", "all"], default="all")
    p.add_argument("--witness", action="store_true", help="include witness colorings")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="verify a coloring JSON against a graph")
    p.add_argument("graph")
    p.add_argument("--literal", action="store_true")
    p.add_argument("--coloring", required=True, help="path to coloring JSON ('-' for stdin)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="emit an extremal/lower-bound coloring")
    p.add_argument("--family", choices=["wheel", "multipartite", "tree", "complete"], required=True)
    p.add_argument("--order", type=int, help="order for wheel/complete")
    p.add_argument("--sizes", help="comma-separated class sizes for multipartite")
    p.add_argument("--graph", help="input graph for --family tree")
    p.add_argument("--literal", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="run every claim check over a corpus")
    p.add_argument("--corpus", required=True, help="graph6 file, edge-list file, or builtin:N (N <= 6)")
    p.add_argument("--csv", help="also write a CSV report to this path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("survey", help="random-graph identity survey")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("hunt", help="scan a corpus for open-question examples")
    p.add_argument("--target", choices=sorted(HUNT_TARGETS), required=True)
    p.add_argument("--corpus", required=True)
    p.set_defaults(func=cmd_hunt)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, FileNotFoundError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ValueError, SolverRangeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
