"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 input error, 3 refusal (size caps).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from graphvc import oracle
from graphvc.bounds import degree_filter, upper_bounds
from graphvc.engine import Ordering, SearchConfig, compute_vcdim
from graphvc.exceptions import BudgetExceededError, CapExceededError, GraphParseError
from graphvc.generators import gen_gnp, gen_grid_perturbed, gen_powerlaw
from graphvc.graph import format_edge_list, read_edge_list
from graphvc.hardness import build_hardness_graph
from graphvc.heuristic import heuristic_search
from graphvc.reducer import reduce_graph
from graphvc.sweep import SweepError, default_jobs, sweep

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_REFUSED = 0, 1, 2, 3

COMPUTE_SCHEMA = "# graphvc-compute v1"
COMPUTE_COLUMNS = ["graph", "n", "m", "vcdim", "lb0", "h_size", "visited", "tentative", "bsize", "elapsed_ms"]
BOUNDS_COLUMNS = ["graph", "n", "m", "log_n", "log_maxdeg_plus1", "degeneracy_plus1", "matching_2M", "best"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _float_list(text: str) -> list[float]:
    return [float(t) for t in text.split(",") if t]


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t]


def _write(path, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_compute(args) -> int:
    g = read_edge_list(args.graph)
    if g.n == 0:
        raise ValueError("graph has no vertices")
    lb_witness = None
    if args.lb is None:
        found = heuristic_search(g, args.maxvisits)
        lb0, lb_witness = found.value, found.witness_ids
    else:
        lb0 = args.lb
    config = SearchConfig(ordering=args.order, ball_restriction=args.ball, graph_reduction=args.reduce,
                          initial_lb=lb0, maxvisits=args.maxvisits, seed=args.seed)
    res = compute_vcdim(g, config, lb_witness=lb_witness)
    st = res.stats
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        print(COMPUTE_SCHEMA)
        writer.writerow(COMPUTE_COLUMNS)
        writer.writerow([args.graph, g.n, g.edge_count, res.vcdim, lb0, st.h_size, st.visited_shattered,
                         st.tentative, f"{st.avg_ball_size:.4f}", f"{st.elapsed * 1000:.3f}"])
        return EXIT_OK
    print(f"vcdim={res.vcdim}")
    if args.witness:
        print("witness=" + " ".join(map(str, res.witness)))
    if args.stats:
        for key, value in [
            ("n", g.n), ("m", g.edge_count), ("lb0", lb0), ("h_size", st.h_size), ("work_n", st.work_n),
            ("visited", st.visited_shattered), ("tentative", st.tentative),
            ("tentative_estimate", f"{st.tentative_estimate:.1f}"), ("bsize", f"{st.avg_ball_size:.4f}"),
            ("elapsed_ms", f"{st.elapsed * 1000:.3f}"),
        ]:
            print(f"{key}={value}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    g = read_edge_list(args.graph)
    rep = upper_bounds(g)
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(BOUNDS_COLUMNS)
        writer.writerow([args.graph, g.n, g.edge_count, *rep.as_dict().values()])
    else:
        for key, value in rep.as_dict().items():
            print(f"{key:<18}{value}")
    return EXIT_OK


def cmd_lowerbound(args) -> int:
    g = read_edge_list(args.graph)
    found = heuristic_search(g, args.maxvisits)
    print(f"lb={found.value}")
    if args.witness:
        print("witness=" + " ".join(map(str, g.labels[found.witness_ids].tolist())))
    return EXIT_OK


def cmd_generate(args) -> int:
    if args.model == "gnp":
        g = gen_gnp(args.n, args.p, args.seed)
    elif args.model == "powerlaw":
        g = gen_powerlaw(args.n, args.beta, args.seed)
    else:
        g = gen_grid_perturbed(args.side, args.delete, args.seed)
    _write(args.output, format_edge_list(g))
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = read_edge_list(args.graph)
    red = reduce_graph(g, degree_filter(g, args.lb))
    _write(args.output, format_edge_list(red.graph))
    if args.map:
        with open(args.map, "w") as fh:
            fh.write("# new_id original_label\n")
            for new, label in enumerate(red.graph.labels.tolist()):
                fh.write(f"{new} {label}\n")
    print(f"# kept {red.graph.n} of {g.n} vertices", file=sys.stderr)
    return EXIT_OK


def cmd_hardness(args) -> int:
    g = read_edge_list(args.graph)
    inst = build_hardness_graph(g, args.k)
    _write(args.output, format_edge_list(inst.host))
    if args.roles:
        with open(args.roles, "w") as fh:
            for row in inst.roles():
                if row["role"] == "X":
                    row["vertex"] = int(g.labels[row["vertex"]])
                fh.write(json.dumps(row) + "\n")
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = read_edge_list(args.graph)
    if args.vcdim:
        print(f"vcdim={oracle.brute_vcdim(g)}")
    if args.shattered is not None:
        index = {int(label): v for v, label in enumerate(g.labels.tolist())}
        try:
            ids = [index[label] for label in _int_list(args.shattered)]
        except KeyError as exc:
            raise ValueError(f"unknown vertex label {exc.args[0]}") from None
        print(f"shattered={str(oracle.is_shattered(g, ids)).lower()}")
    if args.enumerate is not None:
        try:
            print(f"shattered_sets={oracle.enumerate_shattered(g, args.enumerate, budget=args.budget)}")
        except BudgetExceededError as exc:
            print(f"shattered_sets>={exc.partial}")
            raise
    if args.matching:
        print(f"matching_number={oracle.brute_max_matching(g)}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    grid = [(n, p) for n in args.n for p in args.param]
    seeds = list(range(args.seed, args.seed + args.samples))
    out = open(args.output, "w") if args.output not in (None, "-") else sys.stdout
    try:
        sweep(args.model, grid, samples=args.samples, seeds=seeds, jobs=args.jobs, out=out)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="graphvc", description="Exact VC-dimension of graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser,
                                metavar="{compute,bounds,lowerbound,generate,reduce,hardness,sweep}")

    p = sub.add_parser("compute", help="exact VC-dimension of an edge-list file")
    p.add_argument("graph")
    p.add_argument("--order", choices=[o.value for o in Ordering], default=Ordering.KCORE.value)
    p.add_argument("--ball", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--reduce", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--lb", type=int, default=None, help="initial lower bound (skips the heuristic)")
    p.add_argument("--maxvisits", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--stats", action="store_true")
    p.add_argument("--witness", action="store_true")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("bounds", help="upper bounds")
    p.add_argument("graph")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("lowerbound", help="heuristic lower bound")
    p.add_argument("graph")
    p.add_argument("--maxvisits", type=int, default=64)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_lowerbound)

    p = sub.add_parser("generate", help="write a random graph as an edge list")
    models = p.add_subparsers(dest="model", required=True, parser_class=_Parser)
    q = models.add_parser("gnp")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--p", type=float, required=True)
    q = models.add_parser("powerlaw")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--beta", type=float, required=True)
    q = models.add_parser("grid")
    q.add_argument("--side", type=int, required=True)
    q.add_argument("--delete", type=float, default=0.0)
    for q in models.choices.values():
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("reduce", help="trace-preserving reduction for a given lower bound")
    p.add_argument("graph")
    p.add_argument("--lb", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--map", default=None, help="write 'new_id original_label' lines here")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("hardness", help="clique gadget graph")
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.add_argument("--roles", default=None, help="JSON-lines vertex role annotations")
    p.set_defaults(func=cmd_hardness)

    p = sub.add_parser("oracle")
    p.add_argument("graph")
    p.add_argument("--vcdim", action="store_true")
    p.add_argument("--shattered", default=None, metavar="LABELS")
    p.add_argument("--enumerate", type=int, default=None, metavar="MAX_SIZE")
    p.add_argument("--budget", type=int, default=10**7)
    p.add_argument("--matching", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", help="random-graph experiment runner (CSV)")
    p.add_argument("--model", choices=["gnp", "powerlaw"], required=True)
    p.add_argument("--n", type=_int_list, required=True, help="comma-separated vertex counts")
    p.add_argument("--param", type=_float_list, required=True, help="comma-separated p or beta values")
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0, help="first seed; samples use seed..seed+samples-1")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default $GRAPHVC_JOBS or 1)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "jobs", 0) is None:
            args.jobs = default_jobs()
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"graphvc: refused: {exc}", file=sys.stderr)
        return EXIT_REFUSED
    except (OSError, GraphParseError, BudgetExceededError, SweepError, ValueError) as exc:
        print(f"graphvc: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
