"""Command line entry point: ``fanramsey <group> <command> [options]``.

Exit status 0 means the command ran; the semantic answer is in the output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import formulas, graph, oracles
from .detection import contains_clique, find_fan, find_rainbow_fan, read_coloring, write_coloring
from .formulas import BoundedPair
from .graph import FanSpec, read_graph, write_graph
from .harness import grid_failures, lower_bound_coloring, verify_formula_grid, verify_lower_bound
from .partition import edgelow_deficit, read_partition, verify_partition_properties


def _range(text: str) -> range:
    lo, _, hi = text.partition(":")
    lo = int(lo)
    return range(lo, int(hi or lo) + 1)


def _emit(payload: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise SystemExit(f"error: missing --{', --'.join(m.replace('_', '-') for m in missing)}")


def cmd_formula(args) -> None:
    kind = args.kind
    if kind == "turan":
        _need(args, "n", "p")
        payload = {"n": args.n, "p": args.p, "value": formulas.turan_count(args.n, args.p)}
    elif kind == "f":
        _need(args, "nu", "delta")
        payload = {"nu": args.nu, "delta": args.delta, "value": formulas.f_bounded(BoundedPair(args.nu, args.delta))}
    elif kind == "ex-fan":
        _need(args, "n", "k", "r")
        res = formulas.ex_fan(args.n, FanSpec(args.k, args.r))
        payload = {"n": args.n, "k": args.k, "r": args.r, **asdict(res)}
    else:
        _need(args, "n", "k", "r")
        res = formulas.ar_fan(args.n, args.k, args.r)
        payload = {"n": args.n, "kplus1": args.k, "r": args.r, **asdict(res)}
    _emit(payload, args.json)


def cmd_construct(args) -> None:
    kind = args.kind
    if kind == "complete":
        _need(args, "n")
        g = graph.complete(args.n)
    elif kind == "turan":
        _need(args, "n", "p")
        g = graph.turan(args.n, args.p)
    elif kind == "fan":
        _need(args, "k", "r")
        g = graph.fan(args.k, args.r)
    elif kind == "extremal-fan-free":
        _need(args, "n", "k", "r")
        g = formulas.construct_extremal_fan_free(args.n, FanSpec(args.k, args.r))
    else:
        _need(args, "nu", "delta")
        g = formulas.construct_bounded_max(BoundedPair(args.nu, args.delta))
    write_graph(g, args.out)
    print(f"wrote {g.n} vertices, {g.num_edges} edges to {args.out}")


def _witness_dict(w):
    if w is None:
        return None
    return {"center": w.center, "cliques": [list(c) for c in w.cliques], "colors": None if w.colors is None else list(w.colors)}


def cmd_detect(args) -> None:
    kind = args.kind
    if kind == "clique":
        _need(args, "graph", "r")
        found = contains_clique(read_graph(args.graph), args.r)
        payload = {"r": args.r, "found": found is not None, "clique": None if found is None else list(found)}
    elif kind == "fan":
        _need(args, "graph", "k", "r")
        w = find_fan(read_graph(args.graph), FanSpec(args.k, args.r))
        payload = {"k": args.k, "r": args.r, "found": w is not None, "witness": _witness_dict(w)}
    else:
        _need(args, "coloring", "k", "r")
        host = read_graph(args.graph) if args.graph else None
        w = find_rainbow_fan(read_coloring(args.coloring), FanSpec(args.k, args.r), host)
        payload = {"k": args.k, "r": args.r, "found": w is not None, "witness": _witness_dict(w)}
    _emit(payload, args.json)


def cmd_color(args) -> None:
    coloring = lower_bound_coloring(args.n, FanSpec(args.k, args.r))
    write_coloring(coloring, args.out)
    print(f"wrote exact {coloring.num_colors}-colouring of K_{args.n} to {args.out}")


def cmd_oracle(args) -> None:
    budget = oracles.SearchBudget(args.budget) if args.budget else None
    kind = args.kind
    if kind == "ex":
        _need(args, "n")
        if args.clique is not None:
            forbidden = args.clique
        else:
            _need(args, "k", "r")
            forbidden = FanSpec(args.k, args.r)
        result = oracles.solve_ex(args.n, forbidden, budget)
    elif kind == "f":
        _need(args, "nu", "delta")
        result = oracles.solve_f(BoundedPair(args.nu, args.delta), budget)
    else:
        _need(args, "n", "k", "r")
        result = oracles.solve_ar(args.n, FanSpec(args.k, args.r), budget)
    witness_file = None
    if args.witness and result.witness is not None:
        witness_file = args.witness
        if kind == "ar":
            write_coloring(result.witness, witness_file)
        else:
            write_graph(result.witness, witness_file)
    print(result.to_json(witness_file) if args.json else f"value: {result.value}\nnodes: {result.nodes}")


def cmd_verify(args) -> None:
    kind = args.kind
    if kind == "lower-bound":
        _need(args, "n", "k", "r")
        report = verify_lower_bound(args.n, args.k, args.r)
        _emit(report.to_dict(), args.json)
    elif kind == "grid":
        records = verify_formula_grid(_range(args.k_range), _range(args.r_range), _range(args.n_range))
        failures = grid_failures(records)
        payload = {"cells": len(records), "failures": [asdict(f) for f in failures]}
        _emit(payload, args.json)
    else:
        _need(args, "graph", "partition", "k")
        g = read_graph(args.graph)
        parts = read_partition(args.partition, g.n)
        if kind == "partition":
            payload = verify_partition_properties(g, parts, args.k)
        else:
            rep = edgelow_deficit(g, parts, args.k)
            payload = {**asdict(rep), "within_bound": rep.within_bound}
        _emit(payload, args.json)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fanramsey", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="group", required=True)

    p = sub.add_parser("formula", help="closed-form extremal values")
    p.add_argument("kind", choices=["turan", "f", "ex-fan", "ar-fan"])
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--nu", type=int)
    p.add_argument("--delta", type=int)
    p.add_argument("--k", type=int, help="k (for ar-fan: k+1)")
    p.add_argument("--r", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("construct", help="write a graph file")
    p.add_argument("kind", choices=["complete", "turan", "fan", "extremal-fan-free", "bounded-max"])
    for name in ("n", "p", "k", "r", "nu", "delta"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("detect", help="search for cliques, fans and rainbow fans")
    p.add_argument("kind", choices=["clique", "fan", "rainbow-fan"])
    p.add_argument("--graph")
    p.add_argument("--coloring")
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int, help="fan clique size, or the clique size for 'clique'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("color", help="write a colouring file")
    p.add_argument("kind", choices=["lower-bound"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("oracle", help="brute-force ground truth on tiny inputs")
    p.add_argument("kind", choices=["ex", "f", "ar"])
    for name in ("n", "k", "r", "nu", "delta", "clique"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--budget", type=int, help="search node cap")
    p.add_argument("--witness", help="write the optimal graph/colouring here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="consistency checks")
    p.add_argument("kind", choices=["lower-bound", "grid", "partition", "lemma28"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, help="k (for lower-bound: k+1)")
    p.add_argument("--r", type=int)
    p.add_argument("--graph")
    p.add_argument("--partition")
    p.add_argument("--k-range", default="1:6")
    p.add_argument("--r-range", default="3:6")
    p.add_argument("--n-range", default="9:120")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ValueError, oracles.BudgetExhausted) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
