"""Finite oriented graphs and their naive (undirected) shadows.

An oriented graph has ordinary and special vertices and a loop-free set of
arcs.  Every arc must leave an ordinary vertex.  An arc ``(v, w)`` whose
reverse ``(w, v)`` is absent is a *special edge*; otherwise it is ordinary.
That status is always derived from the arc set and never stored.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    DuplicateVertex,
    EmptySubset,
    IncompatibleOverlap,
    InvalidGraphError,
    TooLarge,
    UnknownVertex,
)

DEFAULT_VERTEX_CAP = 64
ISOMORPHISM_CAP = 8

Arc = tuple[str, str]


class VertexKind(str, enum.Enum):
    ORDINARY = "ordinary"
    SPECIAL = "special"

    def __str__(self) -> str:
        return self.value


ORDINARY = VertexKind.ORDINARY
SPECIAL = VertexKind.SPECIAL


@dataclass(frozen=True)
class Violation:
    """One broken invariant found while validating raw graph data."""

    kind: str
    subject: tuple

    def __str__(self) -> str:
        return f"{self.kind}{self.subject!r}"

    def to_dict(self) -> dict:
        return {"kind": self.kind, "subject": list(self.subject)}


def _coerce_vertices(raw_vertices) -> list[tuple]:
    out = []
    for item in raw_vertices:
        if isinstance(item, Mapping):
            out.append((item.get("id"), item.get("kind")))
        else:
            vid, kind = item
            out.append((vid, kind))
    return out


def check(raw: Mapping, max_vertices: int = DEFAULT_VERTEX_CAP) -> list[Violation]:
    """Return every invariant violation in ``raw`` (empty list if valid).

    ``raw`` is a mapping with ``vertices`` (``{"id", "kind"}`` dicts or
    ``(id, kind)`` pairs) and ``arcs`` (``(origin, terminus)`` pairs).
    """
    violations: list[Violation] = []
    vertices = _coerce_vertices(raw.get("vertices", ()))
    arcs = [tuple(a) for a in raw.get("arcs", ())]

    if not vertices:
        violations.append(Violation("EmptyVertexSet", ()))
    if len(vertices) > max_vertices:
        violations.append(Violation("TooManyVertices", (len(vertices), max_vertices)))

    kinds: dict[str, VertexKind] = {}
    for vid, kind in vertices:
        if not isinstance(vid, str) or not vid or any(c.isspace() for c in vid):
            violations.append(Violation("InvalidVertexId", (vid,)))
            continue
        try:
            k = VertexKind(str(kind))
        except ValueError:
            violations.append(Violation("InvalidKind", (vid, kind)))
            k = ORDINARY
        if vid in kinds:
            violations.append(Violation("DuplicateVertex", (vid,)))
            continue
        kinds[vid] = k

    for arc in arcs:
        if len(arc) != 2:
            violations.append(Violation("MalformedArc", tuple(arc)))
            continue
        v, w = arc
        if v == w:
            violations.append(Violation("LoopArc", (v, w)))
            continue
        missing = [x for x in (v, w) if x not in kinds]
        if missing:
            violations.append(Violation("DanglingEndpoint", (v, w)))
            continue
        if kinds[v] is SPECIAL:
            violations.append(Violation("SpecialOrigin", (v, w)))
    return violations


def validate(raw: Mapping, max_vertices: int = DEFAULT_VERTEX_CAP) -> "OrientedGraph":
    """Build an :class:`OrientedGraph` from raw data or raise :class:`InvalidGraphError`."""
    violations = check(raw, max_vertices)
    if violations:
        raise InvalidGraphError(violations)
    vertices = [(vid, VertexKind(str(kind))) for vid, kind in _coerce_vertices(raw["vertices"])]
    return OrientedGraph(tuple(vertices), frozenset(tuple(a) for a in raw.get("arcs", ())))


@dataclass(frozen=True)
class OrientedGraph:
    """Immutable oriented graph.

    ``vertices`` keeps insertion order; ``arcs`` is a set of ordered pairs.
    Construction checks every invariant, so any instance is valid.
    """

    vertices: tuple[tuple[str, VertexKind], ...]
    arcs: frozenset[Arc] = field(default_factory=frozenset)

    def __post_init__(self):
        raw = {"vertices": self.vertices, "arcs": self.arcs}
        violations = check(raw, max_vertices=max(DEFAULT_VERTEX_CAP, len(self.vertices)))
        if violations:
            raise InvalidGraphError(violations)

    @classmethod
    def build(cls, vertices: Iterable, arcs: Iterable = (), edges: Iterable = ()) -> "OrientedGraph":
        """Convenience constructor.

        ``vertices`` may mix bare ids (ordinary) and ``(id, kind)`` pairs;
        ``edges`` adds both arcs of each pair.
        """
        vs = []
        for item in vertices:
            if isinstance(item, str):
                vs.append((item, ORDINARY))
            else:
                vid, kind = item
                vs.append((vid, VertexKind(str(kind))))
        arc_set = {tuple(a) for a in arcs}
        for a, b in edges:
            arc_set.add((a, b))
            arc_set.add((b, a))
        return cls(tuple(vs), frozenset(arc_set))

    # -- derived structure -------------------------------------------------

    @cached_property
    def ids(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.vertices)

    @cached_property
    def kind(self) -> dict[str, VertexKind]:
        return dict(self.vertices)

    @cached_property
    def special_vertices(self) -> frozenset[str]:
        return frozenset(v for v, k in self.vertices if k is SPECIAL)

    @cached_property
    def ordinary_vertices(self) -> frozenset[str]:
        return frozenset(v for v, k in self.vertices if k is ORDINARY)

    @cached_property
    def special_edges(self) -> frozenset[Arc]:
        return frozenset((v, w) for v, w in self.arcs if (w, v) not in self.arcs)

    @cached_property
    def ordinary_edges(self) -> frozenset[Arc]:
        return self.arcs - self.special_edges

    @cached_property
    def neighbors(self) -> dict[str, frozenset[str]]:
        """Adjacency in the naive projection."""
        nb: dict[str, set[str]] = {v: set() for v in self.ids}
        for v, w in self.arcs:
            nb[v].add(w)
            nb[w].add(v)
        return {v: frozenset(s) for v, s in nb.items()}

    def __len__(self) -> int:
        return len(self.vertices)

    def same_as(self, other: "OrientedGraph") -> bool:
        """Equal ids, kinds and arcs, ignoring vertex order."""
        return self.kind == other.kind and self.arcs == other.arcs

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)


@dataclass(frozen=True)
class NaiveGraph:
    """Undirected simple graph; ``edges`` are 2-element frozensets."""

    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]] = field(default_factory=frozenset)

    def __post_init__(self):
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            raise DuplicateVertex("duplicate vertex in naive graph")
        for e in self.edges:
            if len(e) != 2 or not e <= vs:
                raise InvalidGraphError([Violation("BadEdge", tuple(sorted(e)))])

    @classmethod
    def build(cls, vertices: Iterable[str], edges: Iterable = ()) -> "NaiveGraph":
        return cls(tuple(vertices), frozenset(frozenset(e) for e in edges))

    @cached_property
    def neighbors(self) -> dict[str, frozenset[str]]:
        nb: dict[str, set[str]] = {v: set() for v in self.vertices}
        for e in self.edges:
            a, b = tuple(e)
            nb[a].add(b)
            nb[b].add(a)
        return {v: frozenset(s) for v, s in nb.items()}

    def __len__(self) -> int:
        return len(self.vertices)

    def adjacent(self, a: str, b: str) -> bool:
        return b in self.neighbors[a]

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def induced(self, subset: Iterable[str]) -> "NaiveGraph":
        keep = set(subset)
        return NaiveGraph(
            tuple(v for v in self.vertices if v in keep),
            frozenset(e for e in self.edges if e <= keep),
        )

    def components(self) -> list[list[str]]:
        """Connected components, each in vertex order, ordered by first vertex."""
        seen: set[str] = set()
        comps = []
        for start in self.vertices:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                v = stack.pop()
                for w in self.neighbors[v]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append([v for v in self.vertices if v in comp])
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def is_complete(self) -> bool:
        n = len(self.vertices)
        return len(self.edges) == n * (n - 1) // 2


# -- operations ---------------------------------------------------------------


def edge_classification(g: OrientedGraph) -> dict[Arc, str]:
    """Map every arc to ``"special"`` or ``"ordinary"``."""
    return {a: ("special" if a in g.special_edges else "ordinary") for a in g.sorted_arcs()}


def naive_projection(g: OrientedGraph) -> NaiveGraph:
    return NaiveGraph(g.ids, frozenset(frozenset(a) for a in g.arcs))


def induced_subgraph(g: OrientedGraph, subset: Iterable[str]) -> OrientedGraph:
    keep = set(subset)
    if not keep:
        raise EmptySubset("induced subgraph needs at least one vertex")
    unknown = keep - set(g.ids)
    if unknown:
        raise UnknownVertex(f"unknown vertices: {sorted(unknown)}")
    return OrientedGraph(
        tuple(vk for vk in g.vertices if vk[0] in keep),
        frozenset(a for a in g.arcs if a[0] in keep and a[1] in keep),
    )


def relabel(g: OrientedGraph, mapping: Mapping[str, str]) -> OrientedGraph:
    """Rename vertices via ``mapping`` (ids missing from it are kept)."""
    m = lambda v: mapping.get(v, v)  # noqa: E731
    return OrientedGraph(
        tuple((m(v), k) for v, k in g.vertices),
        frozenset((m(v), m(w)) for v, w in g.arcs),
    )


def disjoint_union(
    g1: OrientedGraph, g2: OrientedGraph, prefixes: tuple[str, str] = ("1.", "2.")
) -> OrientedGraph:
    """Disjoint union.

    Ids are kept when the two vertex sets are disjoint; on any collision
    every id of ``g1`` and ``g2`` gets the respective prefix.
    """
    if set(g1.ids) & set(g2.ids):
        g1 = relabel(g1, {v: prefixes[0] + v for v in g1.ids})
        g2 = relabel(g2, {v: prefixes[1] + v for v in g2.ids})
    return OrientedGraph(g1.vertices + g2.vertices, g1.arcs | g2.arcs)


def cone(g: OrientedGraph, tip: str) -> OrientedGraph:
    """Add a fresh ordinary tip joined to every vertex.

    The tip gets a single arc into each special vertex and arcs both ways
    with each ordinary vertex, so the special vertices are unchanged.
    """
    if tip in g.kind:
        raise DuplicateVertex(f"tip {tip!r} already in graph")
    new = set(g.arcs)
    for v, k in g.vertices:
        new.add((tip, v))
        if k is ORDINARY:
            new.add((v, tip))
    return OrientedGraph(g.vertices + ((tip, ORDINARY),), frozenset(new))


def patching(g1: OrientedGraph, g2: OrientedGraph, common: Iterable[str]) -> OrientedGraph:
    """Glue ``g1`` and ``g2`` along the shared vertex set ``common``.

    Both induced subgraphs on ``common`` must coincide exactly (ids, kinds
    and arcs); an empty ``common`` gives the disjoint union.  Ids outside
    ``common`` must not collide.
    """
    common = set(common)
    shared = set(g1.ids) & set(g2.ids)
    if shared != common:
        raise IncompatibleOverlap(
            f"graphs share {sorted(shared)} but patching was requested along {sorted(common)}"
        )
    for v in common:
        if g1.kind[v] != g2.kind[v]:
            raise IncompatibleOverlap(f"vertex {v!r} has different kinds")
    a1 = {a for a in g1.arcs if a[0] in common and a[1] in common}
    a2 = {a for a in g2.arcs if a[0] in common and a[1] in common}
    if a1 != a2:
        raise IncompatibleOverlap("common parts have different arcs")
    extra = tuple(vk for vk in g2.vertices if vk[0] not in common)
    return OrientedGraph(g1.vertices + extra, g1.arcs | g2.arcs)


def _invariant_signature(g: OrientedGraph, v: str) -> tuple:
    out = sum(1 for a in g.arcs if a[0] == v)
    inn = sum(1 for a in g.arcs if a[1] == v)
    return (g.kind[v].value, out, inn)


def isomorphism(
    g1: OrientedGraph, g2: OrientedGraph, cap: int = ISOMORPHISM_CAP
) -> dict[str, str] | None:
    """A kind- and arc-preserving bijection ``g1 -> g2``, or ``None``.

    Brute force over permutations that respect a simple vertex signature
    (kind, out-degree, in-degree).
    """
    if len(g1) > cap or len(g2) > cap:
        raise TooLarge(f"isomorphism test limited to {cap} vertices")
    if len(g1) != len(g2) or len(g1.arcs) != len(g2.arcs):
        return None
    sig1 = {v: _invariant_signature(g1, v) for v in g1.ids}
    sig2 = {v: _invariant_signature(g2, v) for v in g2.ids}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None

    classes: dict[tuple, list[str]] = {}
    for v in g1.ids:
        classes.setdefault(sig1[v], []).append(v)
    keys = sorted(classes)
    sources = [classes[k] for k in keys]
    targets = [[w for w in g2.ids if sig2[w] == k] for k in keys]

    per_class = [list(itertools.permutations(t)) for t in targets]
    for choice in itertools.product(*per_class):
        mapping = {}
        for src, tgt in zip(sources, choice):
            mapping.update(zip(src, tgt))
        if all((mapping[v], mapping[w]) in g2.arcs for v, w in g1.arcs):
            return mapping
    return None


def is_isomorphic(g1: OrientedGraph, g2: OrientedGraph, cap: int = ISOMORPHISM_CAP) -> bool:
    return isomorphism(g1, g2, cap) is not None
