import itertools

import pytest
from hypothesis import strategies as st

from oraag.graph import ORDINARY, SPECIAL, NaiveGraph, OrientedGraph


@st.composite
def oriented_graphs(draw, min_n=1, max_n=5):
    """Random valid oriented graph on ``v1..vn``."""
    n = draw(st.integers(min_n, max_n))
    ids = [f"v{i}" for i in range(1, n + 1)]
    kinds = {v: draw(st.sampled_from([ORDINARY, SPECIAL])) for v in ids}
    arcs = set()
    for a, b in itertools.combinations(ids, 2):
        options = ["none"]
        if kinds[a] is ORDINARY:
            options.append("ab")
        if kinds[b] is ORDINARY:
            options.append("ba")
        if kinds[a] is ORDINARY and kinds[b] is ORDINARY:
            options.append("both")
        choice = draw(st.sampled_from(options))
        if choice in ("ab", "both"):
            arcs.add((a, b))
        if choice in ("ba", "both"):
            arcs.add((b, a))
    return OrientedGraph(tuple((v, kinds[v]) for v in ids), frozenset(arcs))


@st.composite
def naive_graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    ids = [f"v{i}" for i in range(1, n + 1)]
    edges = [p for p in itertools.combinations(ids, 2) if draw(st.booleans())]
    return NaiveGraph.build(ids, edges)


@pytest.fixture
def ordinary_path():
    return OrientedGraph.build(["a", "b", "c"], edges=[("a", "b"), ("b", "c")])
