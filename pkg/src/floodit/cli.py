"""Command-line front end.

Verbs: gen, solve, extremal, strategy, verify, check-cert.
Exit codes: 0 success; 1 verification failure or unmet certificate claim;
2 usage or parse error; 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import extremal as ext
from . import generators as gen
from . import io as fio
from . import solvers, strategies
from .core import play_certificate
from .errors import BudgetExceeded, FlooditError, ParseError


def _csv_ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x != ""]


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="floodit",
        description="Free Flood-It on coloured graphs: generation, exact "
                    "solving, extremal search, strategies and verification.")
    sub = p.add_subparsers(dest="verb", required=True)

    g = sub.add_parser("gen", help="generate a coloured graph file")
    g.add_argument("--family", required=True,
                   choices=["path", "cycle", "star", "blowup-path",
                            "blowup-cycle", "tree", "grid", "random"])
    g.add_argument("--n", type=int, help="vertex count (path/cycle/random) "
                                         "or columns (grid)")
    g.add_argument("--k", type=int, help="grid rows")
    g.add_argument("--leaves", type=int, help="star leaf count")
    g.add_argument("--sizes", type=_csv_ints, help="blow-up class sizes")
    g.add_argument("--tree-c", type=int, help="tree family colour count")
    g.add_argument("--tree-r", type=int, help="tree family radius")
    g.add_argument("--extra-edges", type=int, default=0)
    g.add_argument("--graph-seed", type=int, default=0)
    g.add_argument("--colouring", required=True,
                   choices=["rainbow", "shifted-rainbow", "cycle-rainbow",
                            "path", "scr", "remark", "random"])
    g.add_argument("--colours", type=int, help="palette size c")
    g.add_argument("--shift", type=int, default=0)
    g.add_argument("--pattern", type=_csv_ints,
                   help="class colour sequence for path colourings")
    g.add_argument("--seed", type=int, default=0, help="colouring seed")
    g.add_argument("--out", help="output file (default stdout)")

    s = sub.add_parser("solve", help="exact minimum moves for a graph file")
    s.add_argument("--graph", required=True)
    s.add_argument("--target-colour", type=int)
    s.add_argument("--target-set", type=_csv_ints)
    s.add_argument("--budget", type=int, default=solvers.DEFAULT_BUDGET)
    s.add_argument("--time-limit", type=float,
                   help="wall-clock limit in seconds for the search")
    s.add_argument("--cert", help="write the optimal certificate here")
    s.add_argument("--json", action="store_true")

    e = sub.add_parser("extremal", help="M_c over all surjective colourings")
    e.add_argument("--graph", required=True,
                   help="graph file (its colouring is ignored; only the "
                        "shape is used)")
    e.add_argument("--colours", type=int, required=True)
    e.add_argument("--workers", type=int, default=1)
    e.add_argument("--budget", type=int, default=solvers.DEFAULT_BUDGET)
    e.add_argument("--time-limit", type=float,
                   help="wall-clock limit in seconds per solve")
    e.add_argument("--json", action="store_true")

    t = sub.add_parser("strategy", help="run a constructive strategy")
    t.add_argument("--name", required=True,
                   choices=["radius", "greedy", "rainbow-blowup",
                            "path-colouring", "arbitrary-blowup",
                            "dominating-path"])
    t.add_argument("--graph", required=True)
    t.add_argument("--classes", type=_csv_ints,
                   help="blow-up class sizes, vertices numbered class by "
                        "class (required for blow-up strategies)")
    t.add_argument("--base", choices=["path", "cycle"], default="path")
    t.add_argument("--transversal", type=_csv_ints,
                   help="one vertex per class (dominating-path only)")
    t.add_argument("--cert", help="write the certificate here")
    t.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="run a named theorem campaign")
    v.add_argument("--claim", required=True)
    v.add_argument("--n-max", type=int)
    v.add_argument("--colours", type=_csv_ints)
    v.add_argument("--n-range", help="lo:hi")
    v.add_argument("--instances", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--t-max", type=int)
    v.add_argument("--samples", type=int)
    v.add_argument("--pairs", help="c:r pairs, e.g. 2:1,2:2,3:1")
    v.add_argument("--report", help="write the JSON report here")
    v.add_argument("--json", action="store_true")

    c = sub.add_parser("check-cert", help="replay a certificate")
    c.add_argument("--graph", required=True)
    c.add_argument("--cert", required=True)
    c.add_argument("--json", action="store_true")

    pv = sub.add_parser("predict", help="closed-form values and bounds")
    pv.add_argument("--family", required=True,
                    choices=["path", "cycle", "blowup_path", "blowup_cycle",
                             "tree_Tcr", "colour_bound", "radius_bound",
                             "grid_bounds"])
    pv.add_argument("--n", type=int)
    pv.add_argument("--t", type=int)
    pv.add_argument("--c", type=int)
    pv.add_argument("--r", type=int)
    pv.add_argument("--k", type=int)
    pv.add_argument("--json", action="store_true")
    return p


def _cmd_gen(args) -> int:
    family_map = {
        "path": ("path", {"n": args.n}),
        "cycle": ("cycle", {"n": args.n}),
        "star": ("star", {"leaves": args.leaves}),
        "blowup-path": ("blowup_path", {"sizes": args.sizes}),
        "blowup-cycle": ("blowup_cycle", {"sizes": args.sizes}),
        "tree": ("tree_Tcr", {"c": args.tree_c, "r": args.tree_r}),
        "grid": ("grid", {"k": args.k, "n": args.n}),
        "random": ("random_connected",
                   {"n": args.n, "extra_edges": args.extra_edges,
                    "seed": args.graph_seed}),
    }
    kind, params = family_map[args.family]
    shape = gen.gen_graph(gen.FamilySpec(kind, params))

    col_map = {
        "rainbow": ("rainbow", {"c": args.colours}),
        "shifted-rainbow": ("shifted_rainbow",
                            {"c": args.colours, "shift": args.shift}),
        "cycle-rainbow": ("cycle_rainbow",
                          {"c": args.colours, "shift": args.shift}),
        "path": ("path_colouring", {"f": args.pattern}),
        "scr": ("Scr_tree", {}),
        "remark": ("remark_bichromatic", {"c": args.colours}),
        "random": ("random_surjective",
                   {"c": args.colours, "seed": args.seed}),
    }
    kind, params = col_map[args.colouring]
    colours = gen.gen_colouring(shape, gen.ColouringSpec(kind, params))
    graph = shape.coloured(colours, c=args.colours)
    text = fio.dump_graph(graph)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_solve(args) -> int:
    graph = fio.read_graph(args.graph)
    query = solvers.SolveQuery(
        graph,
        target_set=frozenset(args.target_set) if args.target_set else None,
        target_colour=args.target_colour,
        budget=args.budget,
        time_limit=args.time_limit)
    result = solvers.min_moves_exact(query)
    if args.cert:
        fio.write_certificate(result.certificate, args.cert)
    if args.json:
        print(json.dumps({
            "min_moves": result.moves,
            "explored_states": result.explored_states,
            "moves": [[v, d] for v, d in result.certificate.moves],
        }, indent=2))
    else:
        print(f"min_moves: {result.moves}")
        print(f"explored_states: {result.explored_states}")
    return 0


def _cmd_extremal(args) -> int:
    graph = fio.read_graph(args.graph)
    shape = gen.GraphShape(graph.n, graph.edges, "from-file")
    result = ext.max_moves(shape, args.colours, workers=args.workers,
                           budget=args.budget, time_limit=args.time_limit)
    if args.json:
        print(json.dumps({
            "M_c": result.value,
            "witness_colouring": list(result.witness_colouring),
            "colourings_evaluated": result.colourings_evaluated,
        }, indent=2))
    else:
        print(f"M_c: {result.value}")
        print("witness_colouring: "
              + " ".join(str(x) for x in result.witness_colouring))
        print(f"colourings_evaluated: {result.colourings_evaluated}")
    return 0


def _make_structure(graph, args) -> gen.BlowupStructure:
    if not args.classes:
        raise FlooditError("--classes is required for blow-up strategies")
    if sum(args.classes) != graph.n:
        raise FlooditError("--classes sizes must sum to the vertex count")
    classes = []
    nxt = 0
    for size in args.classes:
        classes.append(tuple(range(nxt, nxt + size)))
        nxt += size
    return gen.BlowupStructure(args.base, tuple(classes))


def _cmd_strategy(args) -> int:
    graph = fio.read_graph(args.graph)
    if args.name == "radius":
        cert = strategies.radius_strategy(graph)
    elif args.name == "greedy":
        cert = solvers.greedy_upper_bound(graph)
    else:
        structure = _make_structure(graph, args)
        if args.name == "rainbow-blowup":
            cert = strategies.rainbow_blowup_strategy(graph, structure)
        elif args.name == "path-colouring":
            cert = strategies.path_colouring_strategy(graph, structure)
        elif args.name == "arbitrary-blowup":
            cert = strategies.arbitrary_blowup_strategy(graph, structure)
        else:
            q = args.transversal or list(strategies.transversal(structure))
            cert = strategies.dominating_path_strategy(graph, structure, q)
    outcome = play_certificate(graph, cert)
    if args.cert:
        fio.write_certificate(cert, args.cert)
    if args.json:
        print(json.dumps({
            "strategy": args.name,
            "length": outcome.length,
            "flooded": outcome.flooded,
            "final_colour": outcome.final_colour,
        }, indent=2))
    else:
        print(f"strategy: {args.name}")
        print(f"length: {outcome.length}")
        print(f"flooded: {outcome.flooded}")
    return 0 if outcome.flooded else 1


def _cmd_verify(args) -> int:
    params: dict = {}
    grid = ext.DEFAULT_GRIDS.get(args.claim, {})
    if args.n_max is not None:
        if "n_range" in grid:
            params["n_range"] = (grid["n_range"][0], args.n_max)
        else:
            params["n_max"] = args.n_max
    if args.n_range:
        lo, hi = args.n_range.split(":")
        params["n_range"] = (int(lo), int(hi))
    if args.colours:
        params["colours"] = tuple(args.colours)
    if args.instances is not None:
        params["instances"] = args.instances
    if args.seed is not None:
        params["seed"] = args.seed
    if args.t_max is not None:
        params["t_max"] = args.t_max
    if args.samples is not None:
        params["samples"] = args.samples
    if args.pairs:
        params["pairs"] = tuple(
            tuple(int(x) for x in pair.split(":"))
            for pair in args.pairs.split(","))
    report = ext.verify_theorem(args.claim, params)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(report.to_json() + "\n")
    if args.json:
        print(report.to_json())
    else:
        print(report.summary())
        for failure in report.failures[:20]:
            print(f"  failure: {failure}")
    return 0 if report.passed else 1


def _cmd_check_cert(args) -> int:
    graph = fio.read_graph(args.graph)
    cert = fio.read_certificate(args.cert)
    outcome = play_certificate(graph, cert)
    if args.json:
        print(json.dumps({
            "flooded": outcome.flooded,
            "target_met": outcome.target_met,
            "final_colour": outcome.final_colour,
            "length": outcome.length,
        }, indent=2))
    else:
        print(f"flooded: {outcome.flooded}")
        print(f"target_met: {outcome.target_met}")
        print(f"final_colour: {outcome.final_colour}")
        print(f"length: {outcome.length}")
    return 0 if outcome.target_met else 1


def _cmd_predict(args) -> int:
    params = {k: getattr(args, k) for k in ("n", "t", "c", "r", "k")
              if getattr(args, k) is not None}
    details = ext.predicted_value_details(args.family, **params)
    if args.json:
        print(json.dumps(details, indent=2))
    elif details["exact"]:
        print(f"value: {details['value']}")
    else:
        print(f"lower: {details['lower']}")
        print(f"upper: {details['upper']}")
        print(f"note: {details['note']}")
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "solve": _cmd_solve,
    "extremal": _cmd_extremal,
    "strategy": _cmd_strategy,
    "verify": _cmd_verify,
    "check-cert": _cmd_check_cert,
    "predict": _cmd_predict,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.verb](args)
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        if e.upper_bound is not None:
            print(f"best known upper bound (inexact): {e.upper_bound}",
                  file=sys.stderr)
        return 3
    except (FlooditError, ParseError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
