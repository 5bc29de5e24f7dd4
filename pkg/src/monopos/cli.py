"""Command-line entry point: ``monopos <subcommand> ...``.

Graph arguments accept a family descriptor (``gear:4``,
``complete_bipartite:2,3``), a file holding graph6 or an edge list, a literal
graph6 string, or ``-`` for stdin.  Exit status: 0 success, 1 usage or input
error, 2 search budget exceeded, 3 a check reported failures.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import checker
from .budget import Budget, default_limit
from .corpus import CorpusSpec, generate_connected_graphs
from .errors import BudgetExceeded, MonoposError
from .families import from_descriptor, is_descriptor
from .graph import Graph, invariants
from .io import from_graph6, guess_format, parse_graph, to_graph6
from .lex import lex_mp
from .paths import find_bad_path, monophonic_interval
from .positions import gp_number, mp_independent, mp_lower, mp_number
from .products import CARTESIAN, LEXICOGRAPHIC, cartesian_product, classify_mp_set, lexicographic_product

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_CHECK = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_graph(arg: str, stdin=None) -> Graph:
    if arg == "-":
        text = (stdin or sys.stdin).read()
        if not text.strip():
            raise UsageError("no graph on stdin")
        return parse_graph(text, guess_format(text))
    if is_descriptor(arg):
        return from_descriptor(arg)
    path = Path(arg)
    if path.is_file():
        text = path.read_text()
        return parse_graph(text, guess_format(text), name=path.stem)
    if ":" in arg:
        # ':' never occurs in graph6, so this was meant as a family descriptor
        return from_descriptor(arg)
    return from_graph6(arg)


def _vertex(token: str, p=None) -> int:
    if "," in token:
        if p is None:
            raise UsageError(f"pair {token!r} given for a plain graph")
        a, b = token.split(",", 1)
        return p.index(int(a), int(b))
    return int(token)


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(human)


def _budget(args) -> Budget:
    return Budget(args.budget)


# ---------------------------------------------------------------- handlers


def cmd_invariants(args) -> int:
    g = load_graph(args.graph)
    inv = invariants(g)
    payload = {"command": "invariants", "n": g.n, "m": g.size, "graph6": to_graph6(g), **inv.to_dict()}
    human = "\n".join(f"{k:>14}: {v}" for k, v in payload.items() if k != "command")
    _emit(args, payload, human)
    return EXIT_OK


_SOLVERS = {"mp": mp_number, "gp": gp_number, "mp-lower": mp_lower, "mp-i": mp_independent}


def cmd_solve(args) -> int:
    g = load_graph(args.graph)
    res = _SOLVERS[args.command](g, _budget(args))
    payload = {"command": args.command, **res.to_dict()}
    human = f"{args.command} = {res.value}\nwitness: {' '.join(map(str, res.witness))}\nnodes: {res.nodes_explored}"
    _emit(args, payload, human)
    return EXIT_OK


def cmd_interval(args) -> int:
    g = load_graph(args.graph)
    j = monophonic_interval(g, args.u, args.v, _budget(args))
    _emit(args, {"command": "interval", "u": args.u, "v": args.v, "interval": j.to_list()},
          " ".join(map(str, j)))
    return EXIT_OK


def cmd_bad_path(args) -> int:
    g = load_graph(args.graph)
    s = [_vertex(t) for t in args.vertices]
    path = find_bad_path(g, s, _budget(args))
    payload = {"command": "bad-path", "set": sorted(s), "path": path, "mp_set": path is None}
    human = "none (set is in monophonic position)" if path is None else " ".join(map(str, path))
    _emit(args, payload, human)
    return EXIT_OK


def _product(kind: str, g: Graph, h: Graph):
    return cartesian_product(g, h) if kind == CARTESIAN else lexicographic_product(g, h)


def cmd_product(args) -> int:
    p = _product(args.kind, load_graph(args.g), load_graph(args.h))
    g6 = to_graph6(p.graph)
    payload = {"command": "product", "kind": p.kind, "n": p.graph.n, "m": p.graph.size, "graph6": g6,
               "vertices": [list(p.coords(i)) for i in range(p.graph.n)]}
    _emit(args, payload, g6)
    return EXIT_OK


def cmd_classify(args) -> int:
    p = cartesian_product(load_graph(args.g), load_graph(args.h))
    s = [_vertex(t, p) for t in args.vertices]
    cls = classify_mp_set(p, s)
    payload = {"command": "classify", **cls.to_dict(),
               "witness": [list(x) for x in p.pairs(s)], "witness_flat": sorted(s)}
    human = f"{cls.tag}" + (f" ({cls.orientation})" if cls.orientation else "")
    _emit(args, payload, human)
    return EXIT_OK


def cmd_lex_mp(args) -> int:
    res = lex_mp(load_graph(args.g), load_graph(args.h), _budget(args))
    payload = {"command": "lex-mp", **res.to_dict()}
    prof = res.best_profile
    human = (f"mp(G∘H) = {res.value}\n"
             f"profile: n_M={prof.n_M} r_M={prof.r_M} cliques={[c.to_list() for c in prof.clique_components]} "
             f"singletons={prof.singletons.to_list()}\n"
             f"shortcut: {res.shortcut_used}\n"
             f"witness: {' '.join(f'{a},{b}' for a, b in res.product.pairs(res.witness))}")
    _emit(args, payload, human)
    return EXIT_OK


def cmd_check(args) -> int:
    try:
        ids = checker.parse_check_ids(args.checks)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    source = args.corpus or "internal"
    single = CorpusSpec(source, max_order=args.max_order, dedup=args.dedup)
    pair = CorpusSpec(source, max_order=args.pair_max_order, dedup=args.dedup)
    g_max, h_max = (int(x) for x in args.lex_orders.split(","))
    lex = (CorpusSpec(source, min_order=2, max_order=g_max, dedup=args.dedup),
           CorpusSpec(source, min_order=2, max_order=h_max, dedup=args.dedup))
    instance = [load_graph(x) for x in args.graphs] if args.graphs else None
    budget = args.budget if args.budget is not None else checker.DEFAULT_INSTANCE_BUDGET
    reports = checker.run_checks(single, pair, ids, lex, budget=budget, instance=instance)
    if args.json:
        print(json.dumps([r.to_dict() for r in reports]))
    else:
        print(f"{'check':<5} {'tested':>7} {'n/a':>5} {'skip':>5} {'fail':>5}  result")
        for r in reports:
            verdict = "PASS" if r.passed else "FAIL"
            extra = f" (found {r.found})" if r.needs_instance else ""
            print(f"{r.check_id:<5} {r.tested:>7} {r.not_applicable:>5} {r.skipped:>5} "
                  f"{len(r.failures):>5}  {verdict}{extra}  {r.title}")
            for f in r.failures[:3]:
                print(f"      counterexample {f.to_dict()}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK


def cmd_generate(args) -> int:
    lines = []
    for n in range(args.min_order, args.max_order + 1):
        lines.extend(to_graph6(g) for g in generate_connected_graphs(n, args.dedup))
    if args.json:
        print(json.dumps({"command": "generate", "graphs": lines}))
    else:
        print("\n".join(lines))
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--budget", type=int, default=default_limit(),
                        help="search node budget (default: $MONOPOS_BUDGET or unlimited)")

    parser = _Parser(prog="monopos", description="Monophonic position numbers of graphs and products.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("invariants", parents=[common], help="omega, alpha, degrees, simplicial vertices")
    p.add_argument("graph")
    p.set_defaults(func=cmd_invariants)

    for name, text in (("mp", "monophonic position number"), ("gp", "general position number"),
                       ("mp-lower", "smallest maximal mp-set"), ("mp-i", "independent mp-number")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("graph")
        p.set_defaults(func=cmd_solve)

    p = sub.add_parser("interval", parents=[common], help="monophonic interval J[u,v]")
    p.add_argument("graph")
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("bad-path", parents=[common], help="induced path through three set members")
    p.add_argument("graph")
    p.add_argument("vertices", nargs="*")
    p.set_defaults(func=cmd_bad_path)

    p = sub.add_parser("product", parents=[common], help="print a product graph as graph6")
    p.add_argument("--kind", choices=[CARTESIAN, LEXICOGRAPHIC], default=CARTESIAN)
    p.add_argument("g")
    p.add_argument("h")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("classify", parents=[common], help="layered/varied/cliquey tag of an mp-set of G□H")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("vertices", nargs="+", help="'g,h' pairs or flat indices g*|H|+h")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("lex-mp", parents=[common], help="mp(G∘H) from the factor profile formula")
    p.add_argument("g")
    p.add_argument("h")
    p.set_defaults(func=cmd_lex_mp)

    p = sub.add_parser("check", parents=[common], help="run the property checks over small-graph corpora")
    p.add_argument("--checks", default=None, help="comma-separated ids, e.g. C1,C5 (default: all)")
    p.add_argument("--max-order", type=int, default=6, help="single-graph corpus order bound")
    p.add_argument("--pair-max-order", type=int, default=4, help="Cartesian factor order bound")
    p.add_argument("--lex-orders", default="4,3", help="G,H order bounds for lexicographic pairs")
    p.add_argument("--corpus", default=None, help="graph6 file to use instead of the internal generator")
    p.add_argument("--dedup", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--graphs", nargs="+", default=None, help="replay one instance: G or G H")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("generate", parents=[common], help="connected graphs as graph6 lines")
    p.add_argument("--max-order", type=int, default=4)
    p.add_argument("--min-order", type=int, default=1)
    p.add_argument("--dedup", action="store_true", help="one graph per isomorphism class")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits on --help (0) and on usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"monopos: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, MonoposError, ValueError, OSError) as exc:
        print(f"monopos: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
