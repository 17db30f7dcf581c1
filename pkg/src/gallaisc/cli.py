"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (message names the error
class), 2 on a usage error. Output is deterministic.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from pathlib import Path

from . import complex as cx
from . import ideal as idl
from .errors import GallaiEdgeless, GallaiError
from .gallai import GallaiGraph, gallai, gallai_complex, labeling_table, uncovered_vertices
from .generators import GRAPH_FAMILIES
from .graph import Graph, is_isomorphic, parse_edgelist, to_edgelist
from .oracle import ORACLES

PALETTE = ["lightblue", "salmon", "palegreen", "khaki", "plum", "lightgray", "orange", "cyan"]


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def _graph_dot(g: Graph, labels=None) -> str:
    lines = ["graph G {"]
    for v in g.vertices:
        if labels is None:
            lines.append(f"  {v};")
        else:
            i, j = labels[v - 1]
            color = PALETTE[(i - 1) % len(PALETTE)]
            lines.append(f'  {v} [label="{{{i},{j}}}", style=filled, fillcolor={color}];')
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _render_graph(g: Graph, fmt: str) -> str:
    if fmt == "json":
        return _dumps(_graph_json(g))
    if fmt == "dot":
        return _graph_dot(g)
    return to_edgelist(g)


def _render_gallai(gg: GallaiGraph, fmt: str) -> str:
    if fmt == "json":
        return _dumps({"graph": _graph_json(gg.graph), "labeling": [list(e) for e in gg.labeling]})
    if fmt == "dot":
        return _graph_dot(gg.graph, gg.labeling)
    return to_edgelist(gg.graph) + "# labeling: gallai-vertex u v\n" + labeling_table(gg)


def _family_graph(parser: argparse.ArgumentParser, name: str, param: str) -> Graph:
    if name not in GRAPH_FAMILIES:
        parser.error(f"unknown family {name!r}; choose from {', '.join(GRAPH_FAMILIES)}")
    try:
        value = int(param)
    except ValueError:
        parser.error(f"family parameter must be an integer, got {param!r}")
    return GRAPH_FAMILIES[name](value)


def _input_graph(parser: argparse.ArgumentParser, args) -> Graph:
    if args.family:
        return _family_graph(parser, *args.family)
    if args.infile:
        return parse_edgelist(Path(args.infile).read_text())
    parser.error("give --in FILE or --family NAME PARAM")


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--in", dest="infile", metavar="FILE", help="edge-list file")
    src.add_argument("--family", nargs=2, metavar=("NAME", "PARAM"), help="generated graph")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gallaisc", description="Gallai graphs and Gallai-simplicial complexes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a graph from a named family")
    p.add_argument("family", choices=sorted(GRAPH_FAMILIES))
    p.add_argument("param", type=int)
    p.add_argument("--format", choices=["edgelist", "json", "dot"], default="edgelist")

    p = sub.add_parser("gallai", help="Gallai graph plus labeling table")
    _add_source(p)
    p.add_argument("--format", choices=["edgelist", "json", "dot"], default="edgelist")

    p = sub.add_parser("complex", help="facets of the Gallai-simplicial complex")
    _add_source(p)
    p.add_argument("--format", choices=["text", "json"], default="text")

    for name in ("fvector", "chi"):
        p = sub.add_parser(name, help="f-vector and Euler characteristic of the Gallai complex")
        _add_source(p)

    p = sub.add_parser("check", help="f-ideal / f-graph / f-Gallai predicates")
    p.add_argument("property", choices=["f-ideal", "f-graph", "f-gallai"])
    p.add_argument("--ideal", metavar="FILE", help="ideal document (for f-ideal)")
    p.add_argument("--report", action="store_true", help="print both f-vectors before the verdict")
    _add_source(p)

    p = sub.add_parser("oracle", help="closed-form families")
    p.add_argument("name", choices=sorted(ORACLES))
    p.add_argument("n", type=int)

    p = sub.add_parser("isomorphic", help="compare two edge-list files")
    p.add_argument("--a", required=True, metavar="FILE")
    p.add_argument("--b", required=True, metavar="FILE")
    return parser


def _dispatch(parser: argparse.ArgumentParser, args) -> str:
    cmd = args.command
    if cmd == "generate":
        return _render_graph(GRAPH_FAMILIES[args.family](args.param), args.format)
    if cmd == "oracle":
        result = ORACLES[args.name](args.n)
        if isinstance(result, set):
            return "".join(" ".join(map(str, F)) + "\n" for F in sorted(result))
        return cx.format_fvector(result) + "\n"
    if cmd == "isomorphic":
        a = parse_edgelist(Path(args.a).read_text())
        b = parse_edgelist(Path(args.b).read_text())
        return f"{str(is_isomorphic(a, b)).lower()}\n"
    if cmd == "check" and args.property == "f-ideal":
        if not args.ideal:
            parser.error("check f-ideal needs --ideal FILE")
        report = idl.is_f_ideal(idl.parse_document(Path(args.ideal).read_text()))
        return report.render()

    g = _input_graph(parser, args)
    if cmd == "gallai":
        return _render_gallai(gallai(g), args.format)
    if cmd == "complex":
        c = gallai_complex(g)
        if args.format == "json":
            return _dumps({
                "facets": [list(F) for F in c.facets],
                "ground": c.vertices,
                "uncovered": uncovered_vertices(g),
            })
        return cx.facet_document(c)
    if cmd in ("fvector", "chi"):
        return cx.format_fvector(cx.f_vector(gallai_complex(g))) + "\n"
    # check f-graph / f-gallai
    target = g
    if args.property == "f-gallai":
        target = gallai(g).graph
        if not target.edges:
            raise GallaiEdgeless("the Gallai graph has no edges")
    report = idl.is_f_ideal(idl.edge_ideal(target))
    return report.render() if args.report else f"{str(report.is_f_ideal).lower()}\n"


def run(argv: list[str] | None = None) -> tuple[int, str, str]:
    """Run the CLI and capture its output as ``(status, stdout, stderr)``."""
    out, err = io.StringIO(), io.StringIO()
    parser = build_parser()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            args = parser.parse_args(argv)
            out.write(_dispatch(parser, args))
            status = 0
        except SystemExit as exc:
            status = exc.code if isinstance(exc.code, int) else 2
        except GallaiError as exc:
            err.write(f"error: {type(exc).__name__}: {exc}\n")
            status = 1
        except OSError as exc:
            err.write(f"error: {exc}\n")
            status = 1
    return status, out.getvalue(), err.getvalue()


def main(argv: list[str] | None = None) -> int:
    status, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return status


if __name__ == "__main__":
    sys.exit(main())
