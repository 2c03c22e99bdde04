"""Named small graphs used throughout the docs and tests.

The CLI accepts ``catalog:<name>`` wherever a graph file is expected.
"""

from __future__ import annotations

from .graph import ORDINARY, SPECIAL, OrientedGraph, cone

O, S = ORDINARY, SPECIAL


def mennicke() -> OrientedGraph:
    """Directed triangle of ordinary vertices; its group is a finite l-group."""
    return OrientedGraph.build(["v1", "v2", "v3"], arcs=[("v1", "v2"), ("v2", "v3"), ("v3", "v1")])


def lambda_s() -> OrientedGraph:
    """Two special arcs into a special middle vertex ``v2``."""
    return OrientedGraph.build([("v1", O), ("v2", S), ("v3", O)], arcs=[("v1", "v2"), ("v3", "v2")])


def easy_arrow() -> OrientedGraph:
    """A single special arc ``v -> w`` into a special vertex."""
    return OrientedGraph.build([("v", O), ("w", S)], arcs=[("v", "w")])


def ordinary_edge() -> OrientedGraph:
    return OrientedGraph.build(["v", "w"], edges=[("v", "w")])


def square() -> OrientedGraph:
    """Four ordinary vertices on a cycle, all edges ordinary."""
    return OrientedGraph.build(
        ["v1", "v2", "v3", "v4"], edges=[("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1")]
    )


def line3() -> OrientedGraph:
    return OrientedGraph.build(["v1", "v2", "v3", "v4"], edges=[("v1", "v2"), ("v2", "v3"), ("v3", "v4")])


def complete_special(n: int = 4) -> OrientedGraph:
    """Complete graph: ordinary ``v1..v(n-1)`` plus one special ``v`` they all point to."""
    g = OrientedGraph(((("v", S)),))
    for i in range(1, n):
        g = cone(g, f"v{i}")
    return g


def iterated_cone() -> OrientedGraph:
    """Three cones over a single special vertex ``v`` (tips ``v1, v2, v3``)."""
    return complete_special(4)


def mixed_arrows() -> OrientedGraph:
    """Special arcs v1->v2, v1->v4, v2->v3; ordinary edges v2-v4, v3-v4; all ordinary."""
    return OrientedGraph.build(
        ["v1", "v2", "v3", "v4"],
        arcs=[("v1", "v2"), ("v1", "v4"), ("v2", "v3")],
        edges=[("v2", "v4"), ("v3", "v4")],
    )


def fan5() -> OrientedGraph:
    """Hub ``v1`` joined to the path ``v2 - v3 - v4 - v5``; all ordinary."""
    return OrientedGraph.build(
        ["v1", "v2", "v3", "v4", "v5"],
        edges=[("v1", "v2"), ("v1", "v3"), ("v1", "v4"), ("v1", "v5"), ("v2", "v3"), ("v3", "v4"), ("v4", "v5")],
    )


def fan5_special() -> OrientedGraph:
    """``fan5`` with ``v5`` special: arcs v1->v5 and v4->v5 become special."""
    return OrientedGraph.build(
        ["v1", "v2", "v3", "v4", ("v5", S)],
        arcs=[("v1", "v5"), ("v4", "v5")],
        edges=[("v1", "v2"), ("v1", "v3"), ("v1", "v4"), ("v2", "v3"), ("v3", "v4")],
    )


def cone_over_lambda_s() -> OrientedGraph:
    """Specially oriented and chordal but not of elementary type."""
    return OrientedGraph.build(
        [("v1", S), "v2", "v3", "v4"],
        arcs=[("v2", "v1"), ("v3", "v1"), ("v4", "v1")],
        edges=[("v2", "v3"), ("v3", "v4")],
    )


CATALOG = {
    "mennicke": mennicke,
    "lambda_s": lambda_s,
    "easy_arrow": easy_arrow,
    "ordinary_edge": ordinary_edge,
    "square": square,
    "line3": line3,
    "complete_special": complete_special,
    "iterated_cone": iterated_cone,
    "mixed_arrows": mixed_arrows,
    "fan5": fan5,
    "fan5_special": fan5_special,
    "cone_over_lambda_s": cone_over_lambda_s,
}
