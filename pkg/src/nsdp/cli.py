"""Command-line entry point: gen, order, solve, bench.

Exit codes: 0 success, 1 usage or I/O error, 2 infeasible (solve),
3 width budget exceeded (solve).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .bench import emit_report, run_benchmark, summarize_wins
from .generator import GeneratorConfig, generate_instance, parse_hypergraph, synth_family
from .graph import build_interaction_graph, run_elimination_game
from .model import Relation, format_instance, parse_instance
from .orderings import Heuristic, compute_ordering
from .solver import DEFAULT_BUDGET, Status, brute_force_solve, solve

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_instance(path) -> "DopInstance":
    path = Path(path)
    return parse_instance(path.read_text(encoding="utf-8"), name=path.stem)


def _write(text: str, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_gen(args) -> int:
    cfg = GeneratorConfig(args.seed, args.coeff_lo, args.coeff_hi, Relation(args.relation))
    if args.hypergraph:
        path = Path(args.hypergraph)
        h = parse_hypergraph(path.read_text(encoding="utf-8"))
        name = path.stem
    else:
        if args.family == "chain":
            params = dict(length=args.length, overlap=args.overlap, width=args.width)
        elif args.family == "grid":
            params = dict(rows=args.rows, cols=args.cols)
        else:
            params = dict(n=args.n, k=args.k, m=args.m, seed=args.seed)
        if any(v is None for v in params.values()):
            missing = [k for k, v in params.items() if v is None]
            raise ValueError(f"family '{args.family}' needs --{' --'.join(missing)}")
        h = synth_family(args.family, **params)
        name = args.name or f"{args.family}_" + "_".join(str(v) for v in params.values())
    _write(format_instance(generate_instance(h, cfg, name)), args.out)
    return EXIT_OK


def _single_ordering(token):
    hs = Heuristic.parse(token)
    if len(hs) != 1:
        raise ValueError("pick a single ordering here")
    return hs[0]


def cmd_order(args) -> int:
    inst = load_instance(args.instance)
    g = build_interaction_graph(inst)
    order = compute_ordering(g, _single_ordering(args.ordering))
    trace = run_elimination_game(g, order)
    print("order:", " ".join(map(str, order)))
    print("induced_width:", trace.induced_width)
    print("total_fill:", trace.total_fill)
    if args.stats:
        for s in trace.steps:
            print(f"  eliminate {s.vertex}: degree {s.degree}, fill {len(s.fill)}")
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = load_instance(args.instance)
    g = build_interaction_graph(inst)
    order = compute_ordering(g, _single_ordering(args.ordering))
    result = solve(inst, order, args.budget)
    st = result.stats
    print("status:", result.status.value)
    if result.status is Status.WIDTH_EXCEEDED:
        exc = st.exceeded
        print(f"exceeded at step {exc.step}: variable {exc.var} needs {exc.cells} cells (budget {exc.budget})")
        return EXIT_BUDGET
    print("optimum:", result.optimum)
    if result.assignment is not None:
        print("assignment:", " ".join(map(str, result.assignment)))
    print(f"induced_width: {st.induced_width}  total_fill: {st.total_fill}  peak_cells: {st.peak_cells}")
    if args.verify_oracle:
        oracle = brute_force_solve(inst)
        agree = oracle.status is result.status and oracle.optimum == result.optimum
        print("oracle:", "match" if agree else f"MISMATCH ({oracle.status.value}, {oracle.optimum})")
        if not agree:
            return EXIT_USAGE
    return EXIT_INFEASIBLE if result.status is Status.INFEASIBLE else EXIT_OK


def _instance_paths(specs):
    paths = []
    for spec in specs:
        p = Path(spec)
        paths.extend(sorted(p.glob("*.dop")) if p.is_dir() else [p])
    return paths


def cmd_bench(args) -> int:
    instances = [load_instance(p) for p in _instance_paths(args.instances)]
    if not instances:
        raise ValueError("no instances found")
    records = run_benchmark(instances, Heuristic.parse(args.orderings), args.repeats, args.budget)
    metric = "induced_width" if args.metric == "width" else "solve_time"
    report_metric = "induced_width" if args.metric == "width" else "total_time"
    _write(emit_report(records, args.format, report_metric), args.out)
    print(summarize_wins(records, metric).format(), file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nsdp", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="generate a random linear binary instance")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=["chain", "grid", "random"])
    src.add_argument("--hypergraph", help="hypergraph structure file")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    p.add_argument("--name")
    p.add_argument("--length", type=int)
    p.add_argument("--overlap", type=int)
    p.add_argument("--width", type=int)
    p.add_argument("--rows", type=int)
    p.add_argument("--cols", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--m", type=int)
    p.add_argument("--coeff-lo", type=int, default=1)
    p.add_argument("--coeff-hi", type=int, default=100)
    p.add_argument("--relation", choices=[r.value for r in Relation], default="le")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("order", help="compute an elimination ordering")
    p.add_argument("--instance", required=True)
    p.add_argument("--ordering", required=True)
    p.add_argument("--stats", action="store_true", help="print per-step degrees and fill")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("solve", help="solve an instance by variable elimination")
    p.add_argument("--instance", required=True)
    p.add_argument("--ordering", required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max cells per table")
    p.add_argument("--verify-oracle", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="benchmark orderings over instances")
    p.add_argument("--instances", nargs="+", required=True, help="instance files or directories of *.dop")
    p.add_argument("--orderings", default="all")
    p.add_argument("--repeats", type=int, default=3)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=["csv", "markdown"], default="csv")
    p.add_argument("--metric", choices=["width", "time"], default="width")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"nsdp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
