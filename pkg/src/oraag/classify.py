"""Special orientation and elementary type.

Two independent deciders for elementary type are provided:

* :func:`is_elementary_type_forbidden` searches for the forbidden induced
  patterns (a square, a path on four vertices, or the oriented graph
  ``Lambda_s``: two special arcs into a common special vertex);
* :func:`decompose_elementary` peels off connected components and cone
  tips and either returns a :class:`DecompositionTree` or fails.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Union

from .errors import Disconnected, NotElementaryType
from .graph import (
    ORDINARY,
    SPECIAL,
    Arc,
    NaiveGraph,
    OrientedGraph,
    VertexKind,
    cone,
    disjoint_union,
    induced_subgraph,
    naive_projection,
)

NOT_SPECIALLY_ORIENTED = "NotSpeciallyOriented"
INDUCED_C4 = "InducedC4"
INDUCED_L3 = "InducedL3"
INDUCED_LAMBDA_S = "InducedLambdaS"


@dataclass(frozen=True)
class ForbiddenWitness:
    kind: str
    vertices: tuple[str, ...]
    arcs: tuple[Arc, ...] = ()

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": list(self.vertices),
            "arcs": [list(a) for a in self.arcs],
        }


# -- decomposition trees ---------------------------------------------------------


@dataclass(frozen=True)
class Leaf:
    id: str
    kind: VertexKind


@dataclass(frozen=True)
class Disjoint:
    children: tuple["DecompositionTree", ...]


@dataclass(frozen=True)
class Cone:
    tip: str
    child: "DecompositionTree"


DecompositionTree = Union[Leaf, Disjoint, Cone]


def tree_to_dict(t: DecompositionTree) -> dict:
    if isinstance(t, Leaf):
        return {"leaf": {"id": t.id, "kind": t.kind.value}}
    if isinstance(t, Cone):
        return {"cone": {"tip": t.tip, "child": tree_to_dict(t.child)}}
    return {"disjoint": [tree_to_dict(c) for c in t.children]}


def tree_from_dict(d: dict) -> DecompositionTree:
    if "leaf" in d:
        return Leaf(d["leaf"]["id"], VertexKind(d["leaf"]["kind"]))
    if "cone" in d:
        return Cone(d["cone"]["tip"], tree_from_dict(d["cone"]["child"]))
    if "disjoint" in d:
        return Disjoint(tuple(tree_from_dict(c) for c in d["disjoint"]))
    raise ValueError(f"not a decomposition tree node: {d!r}")


def rebuild(t: DecompositionTree) -> OrientedGraph:
    """Reassemble the graph described by a decomposition tree."""
    if isinstance(t, Leaf):
        return OrientedGraph(((t.id, t.kind),))
    if isinstance(t, Cone):
        return cone(rebuild(t.child), t.tip)
    parts = [rebuild(c) for c in t.children]
    out = parts[0]
    for p in parts[1:]:
        out = disjoint_union(out, p)
    return out


def render_tree(t: DecompositionTree, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(t, Leaf):
        return f"{pad}{t.id} ({t.kind.value})"
    if isinstance(t, Cone):
        return f"{pad}cone tip {t.tip}\n" + render_tree(t.child, indent + 1)
    return f"{pad}disjoint union\n" + "\n".join(render_tree(c, indent + 1) for c in t.children)


# -- special orientation ------------------------------------------------------------


def is_specially_oriented(g: OrientedGraph) -> tuple[bool, ForbiddenWitness | None]:
    """Every special edge must end in a special vertex.

    On failure the witness holds the offending special edge ``(z, x)`` and,
    if ``x`` emits a further arc ``(x, y)``, that arc as well.
    """
    bad = sorted(e for e in g.special_edges if g.kind[e[1]] is ORDINARY)
    if not bad:
        return True, None
    z, x = bad[0]
    outgoing = sorted(a for a in g.arcs if a[0] == x)
    if outgoing:
        y = outgoing[0][1]
        arcs = [(z, x), (x, y)]
        if (y, x) in g.arcs:
            arcs.append((y, x))
        return False, ForbiddenWitness(NOT_SPECIALLY_ORIENTED, (z, x, y), tuple(arcs))
    return False, ForbiddenWitness(NOT_SPECIALLY_ORIENTED, (z, x), ((z, x),))


def _lambda_s_match(g: OrientedGraph, trio: tuple[str, ...]) -> ForbiddenWitness | None:
    inside = [a for a in g.arcs if a[0] in trio and a[1] in trio]
    if len(inside) != 2:
        return None
    (x, m1), (y, m2) = sorted(inside)
    if m1 != m2 or x == y or g.kind[m1] is not SPECIAL:
        return None
    return ForbiddenWitness(INDUCED_LAMBDA_S, (x, m1, y), ((x, m1), (y, m1)))


def _path_or_square(ng: NaiveGraph, quad: tuple[str, ...]) -> tuple[str, list[str]] | None:
    sub = ng.induced(quad)
    degrees = {v: len(sub.neighbors[v]) for v in quad}
    ne = len(sub.edges)
    if ne == 4 and all(d == 2 for d in degrees.values()):
        start = quad[0]
        kind = INDUCED_C4
    elif ne == 3 and sorted(degrees.values()) == [1, 1, 2, 2]:
        start = min(v for v in quad if degrees[v] == 1)
        kind = INDUCED_L3
    else:
        return None
    order = [start]
    while len(order) < 4:
        nxt = sorted(w for w in sub.neighbors[order[-1]] if w not in order)
        order.append(nxt[0])
    return kind, order


def forbidden_witness(g: OrientedGraph) -> ForbiddenWitness | None:
    """First obstruction to elementary type, or ``None`` if there is none."""
    ok, witness = is_specially_oriented(g)
    if not ok:
        return witness
    for trio in itertools.combinations(g.ids, 3):
        w = _lambda_s_match(g, trio)
        if w is not None:
            return w
    ng = naive_projection(g)
    for quad in itertools.combinations(g.ids, 4):
        found = _path_or_square(ng, quad)
        if found is not None:
            kind, order = found
            arcs = tuple(sorted(a for a in g.arcs if a[0] in order and a[1] in order))
            return ForbiddenWitness(kind, tuple(order), arcs)
    return None


def is_elementary_type_forbidden(g: OrientedGraph) -> tuple[bool, ForbiddenWitness | None]:
    w = forbidden_witness(g)
    return w is None, w


def _is_tip(g: OrientedGraph, v: str) -> bool:
    if g.kind[v] is not ORDINARY:
        return False
    for u, k in g.vertices:
        if u == v:
            continue
        if (v, u) not in g.arcs:
            return False
        if k is ORDINARY and (u, v) not in g.arcs:
            return False
    return True


def _decompose(g: OrientedGraph) -> DecompositionTree | None:
    if len(g) == 1:
        v, k = g.vertices[0]
        return Leaf(v, k)
    comps = naive_projection(g).components()
    if len(comps) > 1:
        children = []
        for comp in comps:
            sub = _decompose(induced_subgraph(g, comp))
            if sub is None:
                return None
            children.append(sub)
        return Disjoint(tuple(children))
    for v in sorted(g.ids):
        if _is_tip(g, v):
            rest = _decompose(induced_subgraph(g, [u for u in g.ids if u != v]))
            return None if rest is None else Cone(v, rest)
    return None


def decompose_elementary(g: OrientedGraph) -> DecompositionTree:
    """Split ``g`` into disjoint unions and cones down to single vertices.

    Raises :class:`NotElementaryType` carrying a forbidden-pattern witness
    when no decomposition exists.  Any valid tip works because induced
    subgraphs of elementary-type graphs are again of elementary type; the
    smallest id is taken for reproducible output.
    """
    tree = _decompose(g)
    if tree is None:
        raise NotElementaryType(forbidden_witness(g))
    return tree


def is_elementary_type_inductive(g: OrientedGraph) -> bool:
    return _decompose(g) is not None


def central_vertices(ng: NaiveGraph) -> list[str]:
    """Vertices adjacent to all others in a connected naive graph."""
    if not ng.is_connected():
        raise Disconnected("central vertices are defined for connected graphs only")
    n = len(ng)
    return sorted(v for v in ng.vertices if len(ng.neighbors[v]) == n - 1)
