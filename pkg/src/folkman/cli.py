"""Command-line interface.

Graphs are read and written as graph6; a missing graph argument or ``-``
reads one graph6 line from standard input.  Exit codes: 0 completed,
1 error, 2 an INDETERMINATE verdict was encountered.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions as cons
from .arrowing import (
    ArrowingError,
    Indeterminate,
    OccurrenceLimitError,
    arrows,
    decode_model,
    export_cnf,
    make_instance,
)
from .claims import UnknownClaim, format_report, verify_paper
from .enumeration import enumerate_nonisomorphic
from .extension import ClassTag, ExtensionError, GraphClass, build_good_coloring, k4_deletion_pipeline, partition_coloring
from .graph import GraphError, emit_graph6, parse_graph6
from .invariants import BudgetExceeded, chromatic_number, clique_number, contains_subgraph, independence_number, is_connected
from .search import ExhaustiveSource, Graph6Source, RandomSource, SearchSpec, search_upper_bound

EXIT_OK, EXIT_ERROR, EXIT_INDETERMINATE = 0, 1, 2


def _read_graph(arg: str | None):
    if arg is None or arg == "-":
        line = sys.stdin.readline()
        if not line.strip():
            raise GraphError("no graph6 input on standard input")
        return parse_graph6(line)
    return parse_graph6(arg)


def _targets(text: str):
    return [cons.parse_target(t) for t in text.split(",") if t.strip()]


def _graph_arg(text: str):
    """A graph given as a short name (K4, B12, ...) or a graph6 string."""
    try:
        return cons.parse_target(text)
    except GraphError:
        return parse_graph6(text)


def cmd_construct(args) -> int:
    g = cons.construct(cons.ConstructionId(cons.Tag(args.id.upper()), tuple(args.params)))
    if args.g6:
        print(emit_graph6(g))
    else:
        print(f"n={g.n} m={g.m}")
        print("edges=" + " ".join(f"{a}-{b}" for a, b in g.edges))
        print(f"g6={emit_graph6(g)}")
    return EXIT_OK


def cmd_invariant(args) -> int:
    g = _read_graph(args.graph)
    out: dict = {"n": g.n, "m": g.m}
    if args.clique:
        out["clique_number"], out["clique"] = clique_number(g)
    if args.alpha:
        out["independence_number"], out["independent_set"] = independence_number(g)
    if args.chi:
        out["chromatic_number"], out["coloring"] = chromatic_number(g)
    for h_text in args.free or []:
        h = _graph_arg(h_text)
        phi = contains_subgraph(g, h)
        out[f"free[{h_text}]"] = phi is None
        if phi is not None:
            out[f"embedding[{h_text}]"] = phi
    for key, value in out.items():
        print(f"{key}={json.dumps(value, separators=(',', ':'))}")
    return EXIT_OK


def cmd_arrow(args) -> int:
    g = _read_graph(args.graph)
    inst = make_instance(g, _targets(args.targets), args.mode)
    if args.cnf:
        text = export_cnf(inst, comment=f"host {emit_graph6(g)} mode {args.mode} targets {args.targets}")
        with open(args.cnf, "w", encoding="ascii") as fh:
            fh.write(text)
        header = next(line for line in text.splitlines() if line.startswith("p cnf"))
        print(f"cnf={args.cnf} header={header}")
        return EXIT_OK
    if args.decode:
        with open(args.decode, encoding="ascii") as fh:
            coloring = decode_model(inst, fh.read())
        print("verdict=FAILS")
        print("witness=" + "".join(map(str, coloring.colors)))
        return EXIT_OK
    try:
        v = arrows(inst, node_limit=args.node_limit)
    except Indeterminate as exc:
        print(f"verdict=INDETERMINATE nodes={exc.nodes}")
        return EXIT_INDETERMINATE
    print(f"verdict={v.outcome.value}")
    if v.witness is not None:
        print("witness=" + "".join(map(str, v.witness.colors)))
    print(f"nodes={v.stats['nodes']} occurrences={v.stats['occurrences']} seconds={v.stats['seconds']:.4f}")
    return EXIT_OK


def cmd_goodcolor(args) -> int:
    g = _read_graph(args.graph)
    colors = build_good_coloring(g, GraphClass(ClassTag(args.cls)))
    print("".join(map(str, colors)))
    return EXIT_OK


def cmd_k4_lift(args) -> int:
    g = _read_graph(args.graph)
    print("".join(map(str, k4_deletion_pipeline(g))))
    return EXIT_OK


def _parse_parts(text: str) -> list[list[int]]:
    return [[int(x) for x in part.split(",") if x.strip()] for part in text.split(";")]


def cmd_partition(args) -> int:
    g = _read_graph(args.graph)
    colors = partition_coloring(g, args.u, _parse_parts(args.parts), args.k)
    print("".join(map(str, colors)))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    avoid = [_graph_arg(a) for a in args.avoid or []]
    for g in enumerate_nonisomorphic(args.n, avoid):
        if args.connected and not is_connected(g):
            continue
        print(emit_graph6(g))
    return EXIT_OK


def cmd_search(args) -> int:
    if args.source == "exhaustive":
        source = ExhaustiveSource(args.n_max, args.n_min)
    elif args.source == "random":
        source = RandomSource(args.n, args.p, args.seed, args.count)
    else:
        if args.file == "-":
            source = Graph6Source(lines=tuple(sys.stdin.read().splitlines()))
        else:
            source = Graph6Source(path=args.file)
    spec = SearchSpec(
        source,
        tuple(_targets(args.targets)),
        args.mode,
        avoid=_graph_arg(args.avoid) if args.avoid else None,
        node_limit=args.node_limit,
    )
    report = search_upper_bound(spec, jobs=args.jobs)
    for key, value in report.as_dict().items():
        print(f"{key}={json.dumps(value, separators=(',', ':'))}")
    return EXIT_INDETERMINATE if report.indeterminate else EXIT_OK


def cmd_verify(args) -> int:
    results = verify_paper(args.claims or None)
    sys.stdout.write(format_report(results))
    return EXIT_OK if all(r.passed for r in results) else EXIT_ERROR


class _Parser(argparse.ArgumentParser):
    # exit code 2 is reserved for INDETERMINATE verdicts
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="folkman", description="Exact Ramsey arrowing and Folkman-number workbench")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="emit a named graph")
    c.add_argument("id", help="K, C, P, STAR, J, BOOK, KHAT, WHEEL5, BULL, BOWTIE, K1_P4, CO_P2P3, "
                              "K14_PLUS_E, THEOREM4, CUBIC_RESIDUE")
    c.add_argument("params", nargs="*", type=int)
    c.add_argument("--g6", action="store_true", help="print only the graph6 string")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("invariant", help="clique/independence/chromatic numbers and freeness")
    c.add_argument("graph", nargs="?")
    c.add_argument("--clique", action="store_true")
    c.add_argument("--alpha", action="store_true")
    c.add_argument("--chi", action="store_true")
    c.add_argument("--free", action="append", metavar="H", help="graph name or graph6; repeatable")
    c.set_defaults(func=cmd_invariant)

    c = sub.add_parser("arrow", help="decide G -> (H_1, ..., H_r)")
    c.add_argument("graph", nargs="?")
    c.add_argument("--mode", choices=["v", "e"], required=True)
    c.add_argument("--targets", required=True, help="comma-separated, e.g. K3,K3")
    c.add_argument("--cnf", metavar="OUT", help="write DIMACS CNF instead of solving")
    c.add_argument("--decode", metavar="MODEL", help="decode and validate a SAT solver model")
    c.add_argument("--node-limit", type=int)
    c.set_defaults(func=cmd_arrow)

    c = sub.add_parser("goodcolor", help="triangle-good edge coloring for a graph class")
    c.add_argument("graph", nargs="?")
    c.add_argument("--class", dest="cls", choices=["j4free", "b3free", "k1p4free"], required=True)
    c.set_defaults(func=cmd_goodcolor)

    c = sub.add_parser("k4-lift", aliases=["lemma7"], help="K_4 deletion, residue coloring, and K_4 recoloring")
    c.add_argument("graph", nargs="?")
    c.set_defaults(func=cmd_k4_lift)

    c = sub.add_parser("partition-color", aliases=["lemma11"], help="two-coloring from a K_k-free partition of V - u")
    c.add_argument("graph", nargs="?")
    c.add_argument("--u", type=int, required=True)
    c.add_argument("--parts", required=True, help="e.g. '1,3;2,4,5'")
    c.add_argument("--k", type=int, required=True)
    c.set_defaults(func=cmd_partition)

    c = sub.add_parser("enumerate", help="nonisomorphic graphs on n vertices")
    c.add_argument("n", type=int)
    c.add_argument("--avoid", action="append", metavar="H")
    c.add_argument("--connected", action="store_true")
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("search", help="smallest H-free graph arrowing the targets")
    c.add_argument("--source", choices=["exhaustive", "random", "file"], required=True)
    c.add_argument("--n-max", type=int, default=5)
    c.add_argument("--n-min", type=int, default=1)
    c.add_argument("--n", type=int, default=8)
    c.add_argument("--p", type=float, default=0.5)
    c.add_argument("--count", type=int, default=100)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--file", default="-")
    c.add_argument("--avoid")
    c.add_argument("--targets", required=True)
    c.add_argument("--mode", choices=["v", "e"], required=True)
    c.add_argument("--node-limit", type=int)
    c.add_argument("--jobs", type=int, default=1)
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("verify-paper", help="reproduce the registered desk-scale claims")
    c.add_argument("claims", nargs="*")
    c.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ArrowingError, ExtensionError, BudgetExceeded, OccurrenceLimitError, UnknownClaim,
            OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
