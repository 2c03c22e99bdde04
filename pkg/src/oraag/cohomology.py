"""Graded dimensions of the exterior Stanley-Reisner algebra and related series.

The degree-n dimension of the exterior algebra on the vertices modulo
products of non-adjacent pairs is the number of n-cliques.  Two recursions
reproduce it on the classes where it is the mod-l cohomology: cones and
free products for elementary-type graphs, and clique-separator
inclusion-exclusion for chordal specially oriented graphs.
"""

from __future__ import annotations

from math import comb

from .chordal import clique_counts, is_chordal, patching_split
from .classify import Cone, DecompositionTree, Disjoint, Leaf, is_specially_oriented
from .errors import NotChordal, NotSpeciallyOriented
from .graph import NaiveGraph, OrientedGraph, naive_projection

CONJECTURE_LABEL = "conjecture evidence (quadratic dual; open question, Question 1.4)"


def trim(coeffs: list[int]) -> list[int]:
    out = list(coeffs)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def poly_add(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def poly_sub(a: list[int], b: list[int]) -> list[int]:
    return poly_add(a, [-x for x in b])


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def stanley_reisner_dims(ng: NaiveGraph) -> list[int]:
    return trim(clique_counts(ng))


def et_hilbert_recursive(t: DecompositionTree) -> list[int]:
    """Hilbert polynomial from a decomposition tree.

    A vertex gives ``1 + t``; a cone multiplies by ``1 + t``; a free product
    adds the factors and counts degree 0 once.
    """
    if isinstance(t, Leaf):
        return [1, 1]
    if isinstance(t, Cone):
        return poly_mul(et_hilbert_recursive(t.child), [1, 1])
    assert isinstance(t, Disjoint)
    total = [0]
    for child in t.children:
        total = poly_add(total, et_hilbert_recursive(child))
    total[0] = 1
    return trim(total)


def _mv(g: OrientedGraph) -> list[int]:
    n = len(g)
    if naive_projection(g).is_complete():
        return [comb(n, k) for k in range(n + 1)]
    g1, g2, delta = patching_split(g)
    h_delta = [comb(len(delta), k) for k in range(len(delta) + 1)]
    h = poly_sub(poly_add(_mv(g1), _mv(g2)), h_delta)
    h[0] = 1
    return trim(h)


def chordal_hilbert_mv(g: OrientedGraph, orientation=None) -> list[int]:
    """Hilbert polynomial via repeated clique-separator splits.

    ``h(G) = h(G1) + h(G2) - h(Delta)`` with complete pieces contributing
    binomial rows.  ``orientation`` does not enter the computation.
    """
    if not is_specially_oriented(g)[0]:
        raise NotSpeciallyOriented("needs a specially oriented graph")
    if not is_chordal(naive_projection(g))[0]:
        raise NotChordal("needs a chordal graph")
    return _mv(g)


def quadratic_dual_series(h: list[int], degree: int) -> list[int]:
    """Coefficients of ``1 / h(-t)`` through ``t**degree``."""
    if not h or h[0] != 1:
        raise ValueError("series must start with 1")
    a = [c * (-1) ** k for k, c in enumerate(h)]
    out = [1]
    for n in range(1, degree + 1):
        s = sum(a[k] * out[n - k] for k in range(1, min(n, len(a) - 1) + 1))
        out.append(-s)
    return out


def cohomology_report(g: OrientedGraph, max_degree: int | None = None, dual: int | None = None) -> dict:
    """JSON-ready summary of the graded dimensions for ``g``.

    The identification with mod-l cohomology is a theorem for chordal
    specially oriented graphs; otherwise degrees up to 2 are known and the
    rest is flagged conjectural (unless there are no triangles at all).
    """
    ng = naive_projection(g)
    h = stanley_reisner_dims(ng)
    chordal_so = is_chordal(ng)[0] and is_specially_oriented(g)[0]
    triangle_free = len(h) <= 3
    shown = h if max_degree is None else h[: max_degree + 1]
    out = {
        "hilbert": shown,
        "basis": "cliques",
        "theorem": "chordal-SR" if chordal_so else "assumed-quadratic",
        "degrees_ge_3_conjectural": not (chordal_so or triangle_free),
    }
    if dual is not None:
        out["dual"] = {"coefficients": quadratic_dual_series(h, dual), "label": CONJECTURE_LABEL}
    return out
