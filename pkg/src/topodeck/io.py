"""Text and JSON graph formats.

Text format, one directive per line, ``#`` starts a comment::

    v <id>            vertex
    e <id> <u> <v>    edge attached at u and v (u = v is a loop)
    h <id> <u>        half-open edge attached at u
    a <id>            open arc
    c <k>             circle count

JSON: ``{"vertices": [...], "edges": [{"id": ..., "ends": [{"v": id} | "open", x2]}], "circles": k}``.

A half-open edge is always written with its attached end first, so a graph
whose half-open edge reads ``(open, u)`` comes back from the text format as
``(u, open)``. JSON keeps the slot order.

Parsing only checks syntax; use :func:`topodeck.graph.validate` for the
graph invariants.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .graph import OPEN, Edge, TopoGraph


def parse_text(text: str) -> TopoGraph:
    vertices: list[str] = []
    edges: list[Edge] = []
    circles = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        op, *args = line.split()
        arity = {"v": 1, "e": 3, "h": 2, "a": 1, "c": 1}.get(op)
        if arity is None:
            raise ParseError(f"unknown directive {op!r}", lineno)
        if len(args) != arity:
            raise ParseError(f"directive {op!r} takes {arity} argument(s), got {len(args)}", lineno)
        if op == "v":
            vertices.append(args[0])
        elif op == "e":
            edges.append(Edge(args[0], (args[1], args[2])))
        elif op == "h":
            edges.append(Edge(args[0], (args[1], OPEN)))
        elif op == "a":
            edges.append(Edge(args[0], (OPEN, OPEN)))
        else:
            try:
                circles = int(args[0])
            except ValueError:
                raise ParseError(f"circle count {args[0]!r} is not an integer", lineno) from None
    return TopoGraph(tuple(vertices), tuple(edges), circles)


def format_text(g: TopoGraph) -> str:
    lines = [f"v {v}" for v in g.vertices]
    for e in g.edges:
        a, b = e.ends
        if a is OPEN and b is OPEN:
            lines.append(f"a {e.id}")
        elif a is OPEN or b is OPEN:
            lines.append(f"h {e.id} {a if b is OPEN else b}")
        else:
            lines.append(f"e {e.id} {a} {b}")
    if g.circles:
        lines.append(f"c {g.circles}")
    return "\n".join(lines) + "\n"


def _slot_from_json(obj, where: str):
    if obj == "open":
        return OPEN
    if isinstance(obj, dict) and set(obj) == {"v"} and isinstance(obj["v"], str):
        return obj["v"]
    raise ParseError(f"{where}: end must be \"open\" or {{\"v\": id}}, got {obj!r}")


def parse_json(text: str) -> TopoGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("top level must be an object")
    vertices = data.get("vertices", [])
    circles = data.get("circles", 0)
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ParseError("vertices must be a list of strings")
    if not isinstance(circles, int) or isinstance(circles, bool):
        raise ParseError("circles must be an integer")
    edges = []
    for i, rec in enumerate(data.get("edges", [])):
        if not isinstance(rec, dict) or not isinstance(rec.get("id"), str):
            raise ParseError(f"edge #{i}: needs a string id")
        ends = rec.get("ends")
        if not isinstance(ends, list) or len(ends) != 2:
            raise ParseError(f"edge {rec['id']!r}: ends must be a list of two slots")
        edges.append(Edge(rec["id"], tuple(_slot_from_json(s, f"edge {rec['id']!r}") for s in ends)))
    return TopoGraph(tuple(vertices), tuple(edges), circles)


def to_json_obj(g: TopoGraph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [{"id": e.id, "ends": ["open" if s is OPEN else {"v": s} for s in e.ends]} for e in g.edges],
        "circles": g.circles,
    }


def format_json(g: TopoGraph) -> str:
    return json.dumps(to_json_obj(g), sort_keys=True) + "\n"


def loads(text: str) -> TopoGraph:
    """Parse either format; JSON is recognised by a leading ``{``."""
    return parse_json(text) if text.lstrip().startswith("{") else parse_text(text)


def load(path: str | Path) -> TopoGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)
