"""Command line front end.

Subcommands read graph6 lines from stdin by default (or a file via --from,
or blank-line-separated edge-list blocks with --edge-list) and write one JSON
object per input graph.  The audit subcommand runs the exhaustive lemma
suites over the built-in enumeration and reports either human-readable text
or, with --json, a byte-stable JSON report.

Exit codes: 0 success, 1 audit suite failure, 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .audit import SUITE_NAMES, audit
from .chromatic import color_uncluttered
from .decompose import certificate_json, classify, decomposition_tree, tree_json
from .errors import InputError, NotUnclutteredError
from .graphio import from_edge_list, from_graph6, to_edge_list, to_graph6


def _read_text(args) -> str:
    if args.from_file and args.from_file != "-":
        with open(args.from_file, "r", encoding="ascii") as fh:
            return fh.read()
    return sys.stdin.read()


def _iter_graphs(args):
    """Yield (label, graph, error) triples from the selected input format."""
    text = _read_text(args)
    if getattr(args, "edge_list", False):
        for block in re.split(r"\n\s*\n", text):
            if not block.strip():
                continue
            try:
                g = from_edge_list(block)
                yield to_graph6(g), g, None
            except InputError as exc:
                yield block.strip().splitlines()[0], None, str(exc)
    else:
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            try:
                yield line, from_graph6(line), None
            except InputError as exc:
                yield line, None, str(exc)


def _witness_json(witness) -> dict:
    return {"pattern": witness.pattern_name, "embedding": list(witness.embedding)}


def _emit(obj: dict) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _cmd_classify(args) -> int:
    bad = False
    for label, g, err in _iter_graphs(args):
        if err is not None:
            _emit({"graph6": label, "error": err})
            bad = True
            continue
        cert = classify(g)
        _emit({"graph6": label,
               "uncluttered": cert.case != "NOT_UNCLUTTERED",
               "certificate": certificate_json(cert)})
    return 2 if bad else 0


def _cmd_color(args) -> int:
    bad = False
    for label, g, err in _iter_graphs(args):
        if err is not None:
            _emit({"graph6": label, "error": err})
            bad = True
            continue
        try:
            coloring = color_uncluttered(g)
        except NotUnclutteredError as exc:
            _emit({"graph6": label, "uncluttered": False,
                   "witness": _witness_json(exc.witness)})
            continue
        _emit({"graph6": label, "uncluttered": True,
               "coloring": coloring.to_json_dict()})
    return 2 if bad else 0


def _cmd_decompose(args) -> int:
    bad = False
    for label, g, err in _iter_graphs(args):
        if err is not None:
            _emit({"graph6": label, "error": err})
            bad = True
            continue
        try:
            tree = decomposition_tree(g)
        except NotUnclutteredError as exc:
            _emit({"graph6": label, "uncluttered": False,
                   "witness": _witness_json(exc.witness)})
            continue
        _emit({"graph6": label, "uncluttered": True, "tree": tree_json(tree)})
    return 2 if bad else 0


def _cmd_encode(args) -> int:
    bad = False
    args.edge_list = True
    for label, g, err in _iter_graphs(args):
        if err is not None:
            sys.stderr.write(f"error: {err}\n")
            bad = True
            continue
        sys.stdout.write(to_graph6(g) + "\n")
    return 2 if bad else 0


def _cmd_decode(args) -> int:
    bad = False
    first = True
    args.edge_list = False
    for label, g, err in _iter_graphs(args):
        if err is not None:
            sys.stderr.write(f"error on {label!r}: {err}\n")
            bad = True
            continue
        if not first:
            sys.stdout.write("\n")
        sys.stdout.write(to_edge_list(g))
        first = False
    return 2 if bad else 0


def _cmd_audit(args) -> int:
    suites = None
    if args.suite:
        suites = tuple(s.strip() for s in args.suite.split(",") if s.strip())
    graphs = None
    if args.from_file:
        if args.from_file == "-":
            graphs = sys.stdin.read().splitlines()
        else:
            try:
                with open(args.from_file, "r", encoding="ascii") as fh:
                    graphs = fh.read().splitlines()
            except OSError as exc:
                sys.stderr.write(f"error: {exc}\n")
                return 2
    try:
        report = audit(args.n_max, suites=suites, jobs=args.jobs,
                       graphs=graphs, allow_large=args.allow_large)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    if args.json:
        sys.stdout.write(report.to_json() + "\n")
    else:
        sys.stdout.write(report.to_text() + "\n")
    return 1 if report.failed else 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uncluttered",
        description="Recognition, certified decomposition, and bounded "
                    "coloring of graphs with no induced fork or antifork.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_stream_flags(p):
        p.add_argument("--from", dest="from_file", metavar="FILE",
                       help="read input from FILE instead of stdin")
        p.add_argument("--edge-list", action="store_true",
                       help="input is blank-line-separated edge-list blocks "
                            "(first line n, then one 'u v' pair per line)")

    p = sub.add_parser("classify", help="certificate for each input graph")
    add_stream_flags(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("color", help="bounded coloring for each input graph")
    add_stream_flags(p)
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("decompose", help="full decomposition tree per graph")
    add_stream_flags(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("encode", help="edge-list blocks to graph6 lines")
    p.add_argument("--from", dest="from_file", metavar="FILE")
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("decode", help="graph6 lines to edge-list blocks")
    p.add_argument("--from", dest="from_file", metavar="FILE")
    p.set_defaults(func=_cmd_decode)

    p = sub.add_parser("audit", help="exhaustive lemma suites over small graphs")
    p.add_argument("--n-max", type=int, default=6, metavar="K",
                   help="largest vertex count to enumerate (default 6)")
    p.add_argument("--suite", metavar="NAME[,NAME...]",
                   help="comma-separated suite selection (default: all of "
                        + ", ".join(SUITE_NAMES) + ")")
    p.add_argument("--json", action="store_true",
                   help="machine-readable report (no timing, byte-stable)")
    p.add_argument("--jobs", type=int, default=1, metavar="N",
                   help="worker processes (default 1)")
    p.add_argument("--allow-large", action="store_true",
                   help="permit n-max above 8")
    p.add_argument("--from", dest="from_file", metavar="FILE",
                   help="audit a graph6 stream from FILE instead of enumerating")
    p.set_defaults(func=_cmd_audit)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
