"""Chordality, maximal cliques, clique trees and clique-separator splits."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Union

from .classify import is_specially_oriented
from .errors import NotChordal, NotSpeciallyOriented, SingleClique
from .graph import NaiveGraph, OrientedGraph, induced_subgraph, naive_projection

Clique = tuple[str, ...]


# -- chordality ----------------------------------------------------------------


def _is_simplicial(ng: NaiveGraph, v: str, alive: set[str]) -> bool:
    nb = [w for w in ng.neighbors[v] if w in alive]
    return all(ng.adjacent(a, b) for a, b in itertools.combinations(nb, 2))


def perfect_elimination_order(ng: NaiveGraph) -> list[str] | None:
    """Repeatedly strip a simplicial vertex; ``None`` if we get stuck."""
    alive = set(ng.vertices)
    order = []
    while alive:
        for v in ng.vertices:
            if v in alive and _is_simplicial(ng, v, alive):
                order.append(v)
                alive.remove(v)
                break
        else:
            return None
    return order


def chordless_cycle(ng: NaiveGraph) -> list[str] | None:
    """An induced cycle of length at least four, if one exists.

    For a vertex ``v`` with non-adjacent neighbours ``a, b``, a shortest
    ``a``-``b`` path avoiding the rest of ``N[v]`` closes a chordless cycle.
    """
    for v in ng.vertices:
        nb = sorted(ng.neighbors[v])
        for a, b in itertools.combinations(nb, 2):
            if ng.adjacent(a, b):
                continue
            blocked = (set(nb) | {v}) - {a, b}
            prev = {a: None}
            queue = deque([a])
            while queue and b not in prev:
                x = queue.popleft()
                for y in sorted(ng.neighbors[x]):
                    if y not in prev and y not in blocked:
                        prev[y] = x
                        queue.append(y)
            if b in prev:
                path = [b]
                while prev[path[-1]] is not None:
                    path.append(prev[path[-1]])
                return [v] + path[::-1]
    return None


def is_chordal(ng: NaiveGraph) -> tuple[bool, list[str] | None]:
    if perfect_elimination_order(ng) is not None:
        return True, None
    return False, chordless_cycle(ng)


# -- cliques -------------------------------------------------------------------


def maximal_cliques(ng: NaiveGraph) -> list[Clique]:
    """All maximal cliques (Bron-Kerbosch with pivoting), sorted."""
    out: list[Clique] = []
    nb = ng.neighbors

    def expand(r: set[str], p: set[str], x: set[str]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: (len(nb[u] & p), u))
        for v in sorted(p - nb[pivot]):
            expand(r | {v}, p & nb[v], x & nb[v])
            p = p - {v}
            x = x | {v}

    expand(set(), set(ng.vertices), set())
    return sorted(out)


def clique_counts(ng: NaiveGraph) -> list[int]:
    """Number of k-cliques for k = 0, 1, ... (the empty clique counts once)."""
    counts = [1]
    nb = ng.neighbors
    order = {v: i for i, v in enumerate(ng.vertices)}

    def grow(size: int, candidates: list[str]) -> None:
        for i, v in enumerate(candidates):
            if len(counts) <= size + 1:
                counts.append(0)
            counts[size + 1] += 1
            grow(size + 1, [w for w in candidates[i + 1:] if w in nb[v]])

    grow(0, sorted(ng.vertices, key=order.__getitem__))
    return counts


def clique_graph(ng: NaiveGraph) -> NaiveGraph:
    """Maximal cliques as nodes (named by index), joined when they intersect."""
    cliques = maximal_cliques(ng)
    edges = [
        (str(i), str(j))
        for i, j in itertools.combinations(range(len(cliques)), 2)
        if set(cliques[i]) & set(cliques[j])
    ]
    return NaiveGraph.build([str(i) for i in range(len(cliques))], edges)


@dataclass(frozen=True)
class CliqueTree:
    cliques: tuple[Clique, ...]
    edges: tuple[tuple[int, int], ...]
    cip_verified: bool

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {i: [] for i in range(len(self.cliques))}
        for i, j in self.edges:
            adj[i].append(j)
            adj[j].append(i)
        return {i: sorted(js) for i, js in adj.items()}

    def path(self, i: int, j: int) -> list[int]:
        adj = self.adjacency()
        prev = {i: None}
        queue = deque([i])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in prev:
                    prev[y] = x
                    queue.append(y)
        out = [j]
        while prev[out[-1]] is not None:
            out.append(prev[out[-1]])
        return out[::-1]

    def leaves(self) -> list[int]:
        return [i for i, js in self.adjacency().items() if len(js) == 1]

    def to_dict(self) -> dict:
        return {
            "cliques": [list(c) for c in self.cliques],
            "edges": [list(e) for e in self.edges],
            "cip_verified": self.cip_verified,
        }


def has_cip(cliques, edges) -> bool:
    """Clique-intersection property, checked along every tree path."""
    t = CliqueTree(tuple(cliques), tuple(edges), False)
    for i, j in itertools.combinations(range(len(cliques)), 2):
        common = set(cliques[i]) & set(cliques[j])
        if not all(common <= set(cliques[k]) for k in t.path(i, j)):
            return False
    return True


def has_running_intersection(cliques, edges) -> bool:
    """For each vertex, the cliques containing it span a connected subtree."""
    adj: dict[int, set[int]] = {i: set() for i in range(len(cliques))}
    for i, j in edges:
        adj[i].add(j)
        adj[j].add(i)
    covered = {v for c in cliques for v in c}
    for v in covered:
        holders = {i for i, c in enumerate(cliques) if v in c}
        start = min(holders)
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in holders and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != holders:
            return False
    return True


def _max_weight_spanning_tree(cliques: list[Clique]) -> list[tuple[int, int]]:
    # Kruskal; zero-weight pairs only ever join separate components
    candidates = sorted(
        itertools.combinations(range(len(cliques)), 2),
        key=lambda ij: (-len(set(cliques[ij[0]]) & set(cliques[ij[1]])), ij),
    )
    parent = list(range(len(cliques)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    tree = []
    for i, j in candidates:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
            tree.append((i, j))
    return sorted(tree)


def clique_tree_cip(ng: NaiveGraph) -> CliqueTree | None:
    """Maximum-weight spanning tree of the clique graph, kept only if it has the CIP.

    Edge weight is the size of the clique intersection.  Cliques of
    different components are joined through empty intersections.
    """
    cliques = maximal_cliques(ng)
    edges = _max_weight_spanning_tree(cliques)
    if not has_cip(cliques, edges):
        return None
    return CliqueTree(tuple(cliques), tuple(edges), True)


# -- splitting ----------------------------------------------------------------------


def naive_patching_split(ng: NaiveGraph) -> tuple[set[str], set[str], Clique]:
    """Vertex sets ``(part1, part2, delta)`` of a clique-separator split.

    ``part1`` is a leaf clique of the clique tree (the one with the largest
    index), ``delta`` its intersection with the tree neighbour, and
    ``part2`` everything except the private vertices of the leaf.
    """
    tree = clique_tree_cip(ng)
    if tree is None:
        raise NotChordal("graph is not chordal")
    if len(tree.cliques) < 2:
        raise SingleClique("graph is a single clique")
    leaf = max(tree.leaves())
    (nbr,) = tree.adjacency()[leaf]
    xi = set(tree.cliques[leaf])
    delta = xi & set(tree.cliques[nbr])
    rest = set(ng.vertices) - (xi - delta)
    order = {v: i for i, v in enumerate(ng.vertices)}
    return xi, rest, tuple(sorted(delta, key=order.__getitem__))


def patching_split(g: OrientedGraph) -> tuple[OrientedGraph, OrientedGraph, Clique]:
    """Split a chordal oriented graph into a leaf clique and the rest.

    Returns ``(g1, g2, delta)`` with ``g1`` induced on the leaf clique and
    ``g2`` induced on the remaining vertices plus ``delta``; patching them
    along ``delta`` gives back ``g``.
    """
    xi, rest, delta = naive_patching_split(naive_projection(g))
    return induced_subgraph(g, xi), induced_subgraph(g, rest), delta


def clique_separator_decomposition(ng: NaiveGraph) -> list[Clique] | None:
    """Recursively split along clique separators found by exhaustive search.

    Returns the pieces (all cliques) or ``None`` when some piece is not a
    clique and has no clique separator.  Independent of clique trees.
    """
    if ng.is_complete():
        return [tuple(sorted(ng.vertices))]
    vertices = list(ng.vertices)
    for size in range(len(vertices) - 1):
        for delta in itertools.combinations(vertices, size):
            if not all(ng.adjacent(a, b) for a, b in itertools.combinations(delta, 2)):
                continue
            rest = ng.induced(v for v in vertices if v not in delta)
            comps = rest.components()
            if len(comps) < 2:
                continue
            first = set(comps[0]) | set(delta)
            second = set(vertices) - set(comps[0])
            left = clique_separator_decomposition(ng.induced(first))
            right = clique_separator_decomposition(ng.induced(second))
            if left is None or right is None:
                return None
            return left + right
    return None


# -- amalgam trees ------------------------------------------------------------------


@dataclass(frozen=True)
class CliqueLeaf:
    vertices: Clique


@dataclass(frozen=True)
class FreeProduct:
    factors: tuple["AmalgamTree", ...]


@dataclass(frozen=True)
class Amalgam:
    """Amalgamated product of two pieces over the clique ``over``.

    ``inclusions`` maps each side name to the injection of ``over``'s
    generators into that side's generators.
    """

    over: Clique
    left: "AmalgamTree"
    right: "AmalgamTree"
    inclusions: tuple[tuple[str, tuple[tuple[str, str], ...]], ...]


AmalgamTree = Union[CliqueLeaf, FreeProduct, Amalgam]


def amalgam_leaves(t: AmalgamTree) -> list[Clique]:
    if isinstance(t, CliqueLeaf):
        return [t.vertices]
    if isinstance(t, FreeProduct):
        return [c for f in t.factors for c in amalgam_leaves(f)]
    return amalgam_leaves(t.left) + amalgam_leaves(t.right)


def amalgam_to_dict(t: AmalgamTree) -> dict:
    if isinstance(t, CliqueLeaf):
        return {"clique": list(t.vertices)}
    if isinstance(t, FreeProduct):
        return {"free_product": [amalgam_to_dict(f) for f in t.factors]}
    return {
        "amalgam": {
            "over": list(t.over),
            "left": amalgam_to_dict(t.left),
            "right": amalgam_to_dict(t.right),
            "inclusions": {side: dict(pairs) for side, pairs in t.inclusions},
        }
    }


def _amalgam(g: OrientedGraph) -> AmalgamTree:
    ng = naive_projection(g)
    comps = ng.components()
    if len(comps) > 1:
        return FreeProduct(tuple(_amalgam(induced_subgraph(g, c)) for c in comps))
    if ng.is_complete():
        return CliqueLeaf(tuple(sorted(g.ids)))
    g1, g2, delta = patching_split(g)
    ident = tuple((v, v) for v in delta)
    return Amalgam(delta, _amalgam(g2), _amalgam(g1), (("left", ident), ("right", ident)))


def amalgam_decomposition(g: OrientedGraph, orientation=None) -> AmalgamTree:
    """Iterated amalgams over cliques down to complete specially oriented pieces.

    Disconnected graphs first split as a free product of their components.
    ``orientation`` is accepted for symmetry with the group-level calls; the
    tree itself does not depend on it.
    """
    ok, _ = is_specially_oriented(g)
    if not ok:
        raise NotSpeciallyOriented("amalgam decomposition needs a specially oriented graph")
    if not is_chordal(naive_projection(g))[0]:
        raise NotChordal("amalgam decomposition needs a chordal graph")
    return _amalgam(g)


def render_amalgam(t: AmalgamTree, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(t, CliqueLeaf):
        return f"{pad}clique {{{', '.join(t.vertices)}}}"
    if isinstance(t, FreeProduct):
        return f"{pad}free product\n" + "\n".join(render_amalgam(f, indent + 1) for f in t.factors)
    return (
        f"{pad}amalgam over {{{', '.join(t.over)}}}\n"
        + render_amalgam(t.left, indent + 1)
        + "\n"
        + render_amalgam(t.right, indent + 1)
    )
