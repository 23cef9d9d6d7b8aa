"""Command-line front end.

    randic compute   --graph6 Bw
    randic essential --edges graph.txt
    randic reduce    --graph6 'I?h]@eOWG'
    randic verify conjecture --exhaustive 5
    randic verify lemmas --gnp 20,0.3,1000 --seed 7 --workers 4
    randic verify constants

Exit status: 0 on success, 1 when a hard check is violated, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import DomainError, GraphError, UnsupportedSizeError
from .graph import Graph, parse_edge_list, parse_graph6, to_graph6
from .invariants import invariant_bundle
from .radical import decimal
from .reduction import reduce_to_core
from .report import render_report
from .sources import GraphSource
from .structure import block_decomposition
from .verify import LEMMA_CHECKS, SUITE_GROUPS, verify_conjecture, verify_constants, verify_lemmas

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph6", metavar="STR", help="inline graph6 string")
    group.add_argument("--edges", metavar="PATH", help="edge-list file: 'n <count>' then one 'u v' per line")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "records"), default="text", help="output format (default: text)")
    p.add_argument("--digits", type=int, default=6, help="decimal places in renderings; verdicts never depend on it (default: 6)")
    p.add_argument("--output", metavar="PATH", help="write to PATH instead of stdout")


def _add_source(p: argparse.ArgumentParser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--input", metavar="PATH", help="file with one graph6 string per line")
    group.add_argument("--exhaustive", type=int, metavar="N", help="all connected labelled graphs on N vertices (2..7)")
    group.add_argument("--gnp", metavar="N,P,COUNT", help="COUNT random graphs G(N, P)")
    group.add_argument("--trees", metavar="N,COUNT", help="COUNT uniform random labelled trees on N vertices")
    group.add_argument("--graph6", metavar="STR", help="a single inline graph6 string")
    p.add_argument("--seed", type=int, default=0, help="seed for random sources (default: 0)")
    p.add_argument("--skip-bad", action="store_true", help="skip malformed input lines and count them instead of failing")
    p.add_argument("--workers", type=int, default=1, help="worker processes (default: 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="randic", description="Exact Randić index and diameter tools.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="R, D and f = R - D/2 of one graph")
    _add_graph_input(p)
    _add_common(p)

    p = sub.add_parser("essential", help="essential vertices, blocks and essential paths")
    _add_graph_input(p)
    _add_common(p)

    p = sub.add_parser("reduce", help="delete qualifying non-essential vertices and print the trace")
    _add_graph_input(p)
    _add_common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    vsub = p.add_subparsers(dest="suite", required=True, parser_class=_Parser)
    for name, text in (("conjecture", "f >= sqrt2 - 1 with equality on paths"), ("lemmas", "property suites")):
        q = vsub.add_parser(name, help=text)
        _add_source(q)
        _add_common(q)
        if name == "lemmas":
            groups = ", ".join(SUITE_GROUPS)
            q.add_argument(
                "--suites",
                default="all",
                help=f"comma-separated check ids or groups ({groups}); ids: {', '.join(LEMMA_CHECKS)} (default: all)",
            )
    q = vsub.add_parser("constants", help="certified numeric constants")
    _add_common(q)
    return parser


def _read_graph(args) -> Graph:
    if args.graph6 is not None:
        return parse_graph6(args.graph6)
    with open(args.edges, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def _split_numbers(text: str, kinds, flag: str):
    parts = text.split(",")
    if len(parts) != len(kinds):
        raise UsageError(f"{flag} expects {len(kinds)} comma-separated values, got {text!r}")
    try:
        return [k(x) for k, x in zip(kinds, parts)]
    except ValueError:
        raise UsageError(f"{flag}: cannot parse {text!r}") from None


def _source(args) -> GraphSource:
    if args.input is not None:
        return GraphSource.graph6_file(args.input, skip_bad=args.skip_bad)
    if args.exhaustive is not None:
        return GraphSource.exhaustive(args.exhaustive)
    if args.gnp is not None:
        n, p, count = _split_numbers(args.gnp, (int, float, int), "--gnp")
        return GraphSource.gnp(n, p, args.seed, count)
    if args.trees is not None:
        n, count = _split_numbers(args.trees, (int, int), "--trees")
        return GraphSource.trees(n, args.seed, count)
    src = GraphSource.inline([args.graph6])
    return GraphSource("list", graphs=src.graphs, skip_bad=args.skip_bad)


def _compute(g: Graph, fmt: str, digits: int) -> str:
    b = invariant_bundle(g)
    if fmt == "records":
        return json.dumps(
            {
                "graph6": to_graph6(g),
                "n": b.n,
                "m": b.m,
                "R": str(b.R),
                "R_decimal": decimal(b.R, digits),
                "D": b.D,
                "f": str(b.f),
                "f_decimal": decimal(b.f, digits),
                "max_degree": b.max_degree,
                "min_degree": b.min_degree,
            },
            sort_keys=True,
        ) + "\n"
    return (
        f"graph6: {to_graph6(g)}\n"
        f"n = {b.n}, m = {b.m}, max degree = {b.max_degree}, min degree = {b.min_degree}\n"
        f"R = {b.R} ~ {decimal(b.R, digits)}\n"
        f"D = {b.D}\n"
        f"f = {b.f} ~ {decimal(b.f, digits)}\n"
    )


def _essential(g: Graph, fmt: str) -> str:
    prof = block_decomposition(g)
    d = prof.to_dict()
    if fmt == "records":
        return json.dumps({"graph6": to_graph6(g), **d}, sort_keys=True) + "\n"
    return "".join(f"{k.replace('_', ' ')}: {v}\n" for k, v in d.items())


def _reduce(g: Graph, fmt: str, digits: int) -> str:
    final, trace = reduce_to_core(g)
    if fmt == "records":
        lines = []
        for s in trace.steps:
            delta = s.r_before - s.r_after
            lines.append(
                {
                    "type": "step",
                    "vertex": s.label,
                    "rule": s.rule,
                    "R_before": str(s.r_before),
                    "R_after": str(s.r_after),
                    "R_drop": str(delta),
                    "R_drop_decimal": decimal(delta, digits),
                    "D_before": s.d_before,
                    "D_after": s.d_after,
                    "dropped": list(s.dropped),
                }
            )
        lines.append({"type": "final", "graph6": to_graph6(final), "labels": list(trace.labels), "steps": len(trace.steps)})
        return "".join(json.dumps(x, sort_keys=True) + "\n" for x in lines)
    out = trace.render(digits)
    head = f"{len(trace.steps)} steps; final graph {to_graph6(final)} on original vertices {list(trace.labels)}\n"
    return head + (out + "\n" if out else "")


def _emit(data: bytes | str, path: str | None) -> None:
    if isinstance(data, str):
        data = data.encode("utf-8")
    if path is None:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.digits < 1:
            raise UsageError("--digits must be at least 1")
        if getattr(args, "workers", 1) < 1:
            raise UsageError("--workers must be at least 1")
        if args.command in ("compute", "essential", "reduce"):
            g = _read_graph(args)
            if args.command == "compute":
                text = _compute(g, args.format, args.digits)
            elif args.command == "essential":
                text = _essential(g, args.format)
            else:
                text = _reduce(g, args.format, args.digits)
            _emit(text, args.output)
            return EXIT_OK
        if args.suite == "constants":
            rep = verify_constants()
        elif args.suite == "conjecture":
            rep = verify_conjecture(_source(args), workers=args.workers)
        else:
            suites = [s for s in args.suites.split(",") if s.strip()]
            try:
                rep = verify_lemmas(_source(args), suites=suites, workers=args.workers)
            except ValueError as exc:
                if "unknown suite" in str(exc):
                    raise UsageError(str(exc)) from None
                raise
        if rep.bad_inputs:
            print(f"randic: warning: skipped {rep.bad_inputs} malformed input lines", file=sys.stderr)
        _emit(render_report(rep, args.format, args.digits), args.output)
        return EXIT_OK if rep.passed else EXIT_VIOLATION
    except UsageError as exc:
        print(f"randic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, UnsupportedSizeError, DomainError, OSError) as exc:
        print(f"randic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
