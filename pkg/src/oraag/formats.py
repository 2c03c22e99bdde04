"""Reading and writing oriented graphs.

Text format, one directive per line, ``#`` starts a comment::

    vertex v1 ordinary
    vertex v2 special
    arc v1 v2          # single arc v1 -> v2
    edge v1 v3         # both arcs

JSON format: ``{"vertices": [{"id": ..., "kind": ...}], "arcs": [[from, to]]}``.
"""

from __future__ import annotations

import json

from .errors import ParseError
from .graph import DEFAULT_VERTEX_CAP, OrientedGraph, validate


def parse_text(text: str) -> dict:
    """Parse the line format into raw graph data (not yet validated)."""
    vertices: list[dict] = []
    arcs: list[list[str]] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head, args = parts[0].lower(), parts[1:]
        if head == "vertex" and len(args) == 2:
            vertices.append({"id": args[0], "kind": args[1].lower()})
        elif head == "arc" and len(args) == 2:
            arcs.append([args[0], args[1]])
        elif head == "edge" and len(args) == 2:
            arcs.append([args[0], args[1]])
            arcs.append([args[1], args[0]])
        else:
            raise ParseError(f"line {lineno}: cannot parse {line!r}")
    return {"vertices": vertices, "arcs": arcs}


def parse_json(text: str) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("graph JSON must be an object")
    return {"vertices": data.get("vertices", []), "arcs": data.get("arcs", [])}


def parse_raw(text: str) -> dict:
    """Dispatch on content: JSON if it starts with ``{``, else the line format."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def loads(text: str, max_vertices: int = DEFAULT_VERTEX_CAP) -> OrientedGraph:
    return validate(parse_raw(text), max_vertices)


def to_dict(g: OrientedGraph) -> dict:
    return {
        "vertices": [{"id": v, "kind": k.value} for v, k in g.vertices],
        "arcs": [list(a) for a in g.sorted_arcs()],
    }


def dumps_json(g: OrientedGraph) -> str:
    return json.dumps(to_dict(g), sort_keys=True)


def dumps_text(g: OrientedGraph) -> str:
    lines = [f"vertex {v} {k.value}" for v, k in g.vertices]
    done = set()
    for v, w in g.sorted_arcs():
        if (v, w) in done:
            continue
        if (w, v) in g.arcs:
            lines.append(f"edge {v} {w}")
            done.add((w, v))
        else:
            lines.append(f"arc {v} {w}")
        done.add((v, w))
    return "\n".join(lines) + "\n"
