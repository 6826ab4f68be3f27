"""Command-line front end.

Graph arguments are resolved as follows:

* ``catalog:NAME`` picks a named graph (``singres catalog list``);
* ``inline:SPEC`` parses the terse form ``w:g,w:g,...;i-j,...`` where
  vertices are numbered from 0 in the order given, e.g.
  ``inline:-3,-3,-3;0-1,1-2,0-2`` or ``inline:-10:1``;
* anything else is read as a path to a JSON graph document.

Exit codes: 0 success, 1 input error, 2 precondition failure (for example
a form that is not negative definite), 3 empty result.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable

from . import catalog
from .classify import classify
from .cycles import DEFAULT_ENUM_CAP, anticanonical_cycle, arithmetic_genus, fundamental_cycle
from .errors import (
    GraphSyntaxError,
    NoPlan,
    NotNegativeDefinite,
    PgUnderdetermined,
    ValidationError,
)
from .graph import (
    DualGraph,
    graph_first_betti,
    intersection_matrix,
    is_negative_definite,
    minimality_warnings,
    parse_graph,
    parse_inline,
)
from .smoothability import link_first_betti, steenbrink
from .sweep import headline_report

SCHEMA_VERSION = 1

EXIT_OK, EXIT_INPUT, EXIT_PRECONDITION, EXIT_EMPTY = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def resolve_graph(source: str) -> tuple[str, DualGraph]:
    if source.lower().startswith("catalog:"):
        name = source.split(":", 1)[1]
        try:
            entry = catalog.lookup(name)
        except KeyError:
            raise CliError(f"unknown catalog graph {name!r}", EXIT_INPUT) from None
        return entry.name, entry.graph
    if source.lower().startswith("inline:"):
        return source, parse_inline(source.split(":", 1)[1])
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {source}: {exc.strerror or exc}", EXIT_INPUT) from None
    return str(path), parse_graph(text)


def _envelope(command: str, source: str, body: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "input": source, **body}


def cmd_analyze(source: str) -> dict:
    name, g = resolve_graph(source)
    m = intersection_matrix(g)
    nd = is_negative_definite(m)
    body = {
        "vertices": g.to_document()["vertices"],
        "intersection_matrix": [list(r) for r in m.entries],
        "negative_definite": nd,
        "graph_b1": graph_first_betti(g),
        "b1_link": link_first_betti(g),
        "minimality_warnings": [w.to_dict() for w in minimality_warnings(g)],
    }
    if not nd:
        raise CliError("intersection matrix is not negative definite", EXIT_PRECONDITION)
    z = fundamental_cycle(g)
    body["z_num"] = z.to_json()
    body["z_k"] = anticanonical_cycle(g).to_json()
    body["pa_znum"] = int(arithmetic_genus(z, g))
    return _envelope("analyze", name, body)


def cmd_classify(source: str, cap: int = DEFAULT_ENUM_CAP) -> dict:
    name, g = resolve_graph(source)
    return _envelope("classify", name, classify(g, cap).to_dict())


def cmd_steenbrink(source: str, pg: str = "auto", cap: int = DEFAULT_ENUM_CAP) -> dict:
    name, g = resolve_graph(source)
    if pg == "auto":
        p_g = None
    else:
        try:
            p_g = int(pg)
        except ValueError:
            raise CliError(f"--pg expects an integer or 'auto', got {pg!r}", EXIT_INPUT) from None
        if p_g < 0:
            raise CliError("--pg must be non-negative", EXIT_INPUT)
    return _envelope("steenbrink", name, steenbrink(g, p_g, cap).to_dict())


def cmd_sweep(target: int) -> tuple[dict, str]:
    report = headline_report(target)
    return _envelope("sweep", f"target={target}", report.to_dict()), report.render_text()


def cmd_catalog_list() -> dict:
    rows = [
        {"name": e.name, "vertices": e.graph.n, "notes": e.notes}
        for e in catalog.entries()
    ]
    rows.append({"name": "SE(d)", "vertices": 1, "notes": "any negative integer d"})
    return {"schema_version": SCHEMA_VERSION, "command": "catalog list", "entries": rows}


def _text(doc: dict, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for key, value in doc.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  - " + ", ".join(f"{k}={v}" for k, v in item.items()))
        else:
            lines.append(f"{pad}{key}: {json.dumps(value) if isinstance(value, list) else value}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default="json")
    capp = argparse.ArgumentParser(add_help=False)
    capp.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP,
                      help="maximum subcycle box size for the minimal ellipticity check")

    p = argparse.ArgumentParser(prog="singres", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("analyze", parents=[fmt])
    s.add_argument("graph", help="catalog:NAME, inline:SPEC or a JSON file")
    s = sub.add_parser("classify", parents=[fmt, capp])
    s.add_argument("graph", help="catalog:NAME, inline:SPEC or a JSON file")
    s = sub.add_parser("steenbrink", parents=[fmt, capp])
    s.add_argument("graph")
    s.add_argument("--pg", default="auto", help="geometric genus, or 'auto'")
    s = sub.add_parser("sweep", parents=[fmt])
    s.add_argument("--target", type=int, required=True, help="Euler number d of the target disc bundle")
    s = sub.add_parser("catalog", parents=[fmt])
    s.add_argument("action", choices=("list",))
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    text_override: str | None = None
    try:
        if args.command == "analyze":
            doc = cmd_analyze(args.graph)
        elif args.command == "classify":
            doc = cmd_classify(args.graph, args.enum_cap)
        elif args.command == "steenbrink":
            doc = cmd_steenbrink(args.graph, args.pg, args.enum_cap)
        elif args.command == "sweep":
            doc, text_override = cmd_sweep(args.target)
        else:
            doc = cmd_catalog_list()
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (GraphSyntaxError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NotNegativeDefinite, PgUnderdetermined) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except NoPlan as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_EMPTY

    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(text_override if text_override is not None else _text(doc))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
