"""Command-line front end: ``grundy <subcommand> [options]``.

Exit status is 0 when every requested check passes, 1 when a check fails or
a search is inconclusive, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import __version__
from .atoms import generate_atoms
from .coloring import Coloring, greedy_color, is_grundy, is_proper
from .constructions import (
    ConstructionOutcome,
    bipartite_times_path_or_cycle,
    complete_times_any,
    complete_times_bipartite,
    even_torus_coloring,
    mesh_coloring,
    ng_counterexample,
    nonbipartite_times_path_or_cycle,
    odd_torus_value,
)
from .errors import BudgetExhausted, GrundyError
from .graph import Graph, bipartition, complement, make_family, product_of
from .io import GRAPH_FORMATS, dump_coloring, emit_dot, emit_graph, load_coloring, parse_family, parse_graph
from .reproduce import CHECKS, render_csv, render_markdown, run_checks
from .sampling import DEFAULT_SEED
from .solver import SearchBudget, grundy_exact, grundy_witness, independence_number, ng_check, upper_bounds

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

RULES = ("prop3", "prop4", "thm2", "thm3", "mesh", "even-torus", "odd-torus", "ng")


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}") from None


def _threads_default() -> int:
    env = os.environ.get("GRUNDY_THREADS")
    if env is None:
        return 1
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _budget(args) -> SearchBudget:
    return SearchBudget(max_nodes=args.budget_nodes, max_time=args.budget_seconds, threads=args.threads)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load_graph(args) -> Graph:
    if args.input is not None:
        return parse_graph(_read(args.input), args.format)
    if args.family is None:
        raise UsageError("give a graph with --family/--n, --family/--dims or --input")
    sizes = args.dims if args.dims is not None else (args.n or [])
    return make_family(args.family, *sizes)


def _colors(c: Coloring) -> str:
    return " ".join(map(str, c.colors))


# -- subcommands -----------------------------------------------------------------


def cmd_exact(args, out) -> int:
    g = _load_graph(args)
    res = grundy_exact(g, _budget(args))
    if res.exact:
        print(f"gamma = {res.value}", file=out)
    else:
        print(f"gamma >= {res.value} (inconclusive: budget exhausted)", file=out)
    print(f"witness = {_colors(res.witness)}", file=out)
    return EXIT_OK if res.exact else EXIT_FAIL


def cmd_witness(args, out) -> int:
    g = _load_graph(args)
    try:
        found = grundy_witness(g, args.target, _budget(args))
    except BudgetExhausted:
        print(f"inconclusive: no {args.target}-color witness found within budget", file=out)
        return EXIT_FAIL
    if found is None:
        print(f"none: no Grundy coloring with {args.target} colors", file=out)
        return EXIT_FAIL
    print(dump_coloring(found), file=out)
    return EXIT_OK


def cmd_greedy(args, out) -> int:
    g = _load_graph(args)
    order = args.order if args.order is not None else list(range(g.n))
    c = greedy_color(g, order)
    print(f"colors = {c.num_colors}", file=out)
    print(dump_coloring(c), file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    g = _load_graph(args)
    c = load_coloring(_read(args.coloring))
    report = is_proper(g, c) if args.proper_only else is_grundy(g, c)
    ok = report.proper if args.proper_only else report.grundy
    print(f"proper = {str(report.proper).lower()}", file=out)
    if not args.proper_only:
        print(f"grundy = {str(report.grundy).lower()}", file=out)
    print(f"colors = {c.num_colors}", file=out)
    for v in report.violations:
        extra = f" neighbor {v.neighbor}" if v.neighbor is not None else ""
        print(f"violation: vertex {v.vertex} color {v.color} {v.kind}{extra}", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_product(args, out) -> int:
    if not args.factors:
        raise UsageError("product needs at least one --factor")
    g, coords = product_of([parse_family(f) for f in args.factors])
    if args.exact:
        res = grundy_exact(g, _budget(args))
        print(f"n = {g.n} m = {g.num_edges} sizes = {','.join(map(str, coords.sizes))}", file=out)
        print(f"gamma = {res.value}" if res.exact else f"gamma >= {res.value} (inconclusive)", file=out)
        print(f"witness = {_colors(res.witness)}", file=out)
        return EXIT_OK if res.exact else EXIT_FAIL
    out.write(emit_dot(g) if args.emit == "dot" else emit_graph(g, args.emit))
    return EXIT_OK


def _factor_with_witness(args, budget):
    g = _load_graph(args)
    res = grundy_exact(g, budget)
    if not res.exact:
        raise BudgetExhausted("could not solve the factor graph exactly")
    return g, res.witness


def _construct(args, budget) -> ConstructionOutcome | None:
    rule = args.rule
    if rule in ("mesh", "even-torus", "odd-torus"):
        if args.dims is None:
            raise UsageError(f"--rule {rule} needs --dims")
        fn = {"mesh": mesh_coloring, "even-torus": even_torus_coloring, "odd-torus": odd_torus_value}[rule]
        return fn(args.dims, budget)
    if rule == "ng":
        return None
    g, w = _factor_with_witness(args, budget)
    if rule in ("prop3", "prop4"):
        if args.second is None or args.length is None:
            raise UsageError(f"--rule {rule} needs --second and --length")
        if rule == "prop3":
            return bipartite_times_path_or_cycle(g, bipartition(g), w, args.second, args.length, budget)
        return nonbipartite_times_path_or_cycle(g, w, args.second, args.length, budget)
    if args.p is None:
        raise UsageError(f"--rule {rule} needs --p")
    if rule == "thm2":
        return complete_times_bipartite(args.p, g, bipartition(g), w, budget)
    return complete_times_any(args.p, g, w, budget)


def cmd_construct(args, out) -> int:
    budget = _budget(args)
    if args.rule == "ng":
        sizes = args.n or [1, 1, 1]
        if len(sizes) != 3:
            raise UsageError("--rule ng needs --n a,b,c")
        g, cg, cc = ng_counterexample(*sizes)
        rep = ng_check(g, budget)
        print(f"n = {g.n}", file=out)
        print(f"gamma = {rep.gamma} gamma_complement = {rep.gamma_complement} sum = {rep.sum}", file=out)
        print(f"bound n+1 = {g.n + 1} holds = {str(rep.bound_holds).lower()}", file=out)
        print(f"conditions = {','.join(rep.conditions) or 'none'}", file=out)
        print(f"coloring = {_colors(cg)}", file=out)
        print(f"complement_coloring = {_colors(cc)}", file=out)
        if args.emit == "dot":
            out.write(emit_dot(g, cg))
        ok = is_grundy(g, cg).grundy and is_grundy(complement(g), cc).grundy
        return EXIT_OK if ok and rep.sum >= g.n + 2 else EXIT_FAIL
    res = _construct(args, budget)
    print(f"rule = {res.rule}", file=out)
    print(f"n = {res.product.n} sizes = {','.join(map(str, res.coords.sizes))}", file=out)
    print(f"colors = {res.colors_used} claimed = {res.claimed_lower_bound} upper = {res.upper_bound}", file=out)
    print(f"verified = {str(res.verified).lower()} exact = {str(res.exact).lower()}", file=out)
    if not res.construction_ok or res.note:
        print(f"note = {res.note}", file=out)
    if args.emit == "dot":
        out.write(emit_dot(res.product, res.coloring))
    else:
        print(dump_coloring(res.coloring), file=out)
    return EXIT_OK if res.verified else EXIT_FAIL


def cmd_bounds(args, out) -> int:
    g = _load_graph(args)
    ub = upper_bounds(g)
    print(f"n = {g.n} m = {g.num_edges} max_degree = {g.max_degree}", file=out)
    print(f"delta_plus_one = {ub.delta_plus_one}", file=out)
    if ub.stability_bound is not None:
        print(f"alpha = {independence_number(g)}", file=out)
        print(f"stability_bound = {ub.stability_bound}", file=out)
    else:
        print("stability_bound = n/a", file=out)
    print(f"degree_bound = {ub.degree_bound}", file=out)
    print(f"combined = {ub.combined}", file=out)
    return EXIT_OK


def cmd_atoms(args, out) -> int:
    atoms = generate_atoms(args.k, _budget(args), critical_only=args.critical_only)
    print(f"k = {atoms.k} members = {len(atoms.members)} complete = {str(atoms.complete).lower()}", file=out)
    for i, a in enumerate(atoms.members):
        print(
            f"# atom {i}: n = {a.graph.n} m = {a.graph.num_edges} "
            f"edge_critical = {str(a.edge_critical).lower()} label = {a.label.hex()}",
            file=out,
        )
        if args.emit == "dot":
            out.write(emit_dot(a.graph, a.witness, name=f"atom{i}"))
        else:
            out.write(emit_graph(a.graph, args.emit))
            print(f"certificate = {dump_coloring(a.witness)}", file=out)
    return EXIT_OK if atoms.complete else EXIT_FAIL


def cmd_reproduce(args, out) -> int:
    if not args.all and not args.check:
        raise UsageError("reproduce needs --all or at least one --check")
    names = list(CHECKS) if args.all else args.check
    rows = run_checks(names, seed=args.seed, budget=_budget(args))
    out.write(render_csv(rows) if args.table == "csv" else render_markdown(rows))
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget-nodes", type=int, default=10**9, help="search node limit (default 1e9)")
    common.add_argument("--budget-seconds", type=float, default=600.0, help="wall-clock limit per search")
    common.add_argument(
        "--threads", type=int, default=_threads_default(), help="parallelism hint (falls back to GRUNDY_THREADS)"
    )
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized checks")
    common.add_argument("--output", "-o", help="write the report here instead of stdout")

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("--family", help="generated family, e.g. path, cycle, complete_bipartite, mesh")
    graph.add_argument("--n", type=_int_list, help="family sizes, comma separated")
    graph.add_argument("--dims", type=_int_list, help="dimensions for mesh/torus, comma separated")
    graph.add_argument("--input", help="graph file ('-' for stdin)")
    graph.add_argument("--format", choices=GRAPH_FORMATS, default="dimacs", help="input graph format")

    emit = argparse.ArgumentParser(add_help=False)
    emit.add_argument("--emit", choices=("dimacs", "edge-list", "dot"), default="dimacs", help="output graph format")

    p = argparse.ArgumentParser(prog="grundy", description="Grundy numbers, witnesses and constructions.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("exact", parents=[common, graph], help="exact Grundy number with a witness")
    s.set_defaults(func=cmd_exact)
    s = sub.add_parser("witness", parents=[common, graph], help="search a Grundy coloring with a target color count")
    s.add_argument("--target", type=int, required=True)
    s.set_defaults(func=cmd_witness)
    s = sub.add_parser("greedy", parents=[common, graph], help="first-fit coloring along an order")
    s.add_argument("--order", type=_int_list, help="vertex order, comma separated (default 0..n-1)")
    s.set_defaults(func=cmd_greedy)
    s = sub.add_parser("verify", parents=[common, graph], help="check a coloring document against a graph")
    s.add_argument("--coloring", required=True, help='JSON file {"n": ..., "colors": [...]}')
    s.add_argument("--proper-only", action="store_true")
    s.set_defaults(func=cmd_verify)
    s = sub.add_parser("product", parents=[common, emit], help="Cartesian product of family graphs")
    s.add_argument("--factor", dest="factors", action="append", help="family descriptor, e.g. 'cycle 5'; repeat")
    s.add_argument("--exact", action="store_true", help="solve the product instead of printing it")
    s.set_defaults(func=cmd_product)
    s = sub.add_parser("construct", parents=[common, graph, emit], help="explicit product colorings")
    s.add_argument("--rule", choices=RULES, required=True)
    s.add_argument("--second", choices=("path", "cycle"), help="second factor kind for prop3/prop4")
    s.add_argument("--length", type=int, help="second factor length for prop3/prop4")
    s.add_argument("--p", type=int, help="complete factor order for thm2/thm3")
    s.set_defaults(func=cmd_construct)
    s = sub.add_parser("bounds", parents=[common, graph], help="upper bounds on the Grundy number")
    s.set_defaults(func=cmd_bounds)
    s = sub.add_parser("atoms", parents=[common, emit], help="edge-minimal graphs by vertex merging")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--critical-only", action="store_true")
    s.set_defaults(func=cmd_atoms)
    s = sub.add_parser("reproduce", parents=[common], help="run the reproduction table")
    s.add_argument("--all", action="store_true")
    s.add_argument("--check", action="append", choices=list(CHECKS))
    s.add_argument("--table", choices=("markdown", "csv"), default="markdown")
    s.set_defaults(func=cmd_reproduce)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    try:
        return args.func(args, out)
    except BudgetExhausted as exc:
        print(f"grundy {args.command}: inconclusive: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, GrundyError, ValueError, OSError) as exc:
        print(f"grundy {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
