"""Oriented graphs, their elementary-type and chordal structure, and the
invariants of the associated oriented right-angled Artin pro-l groups."""

from .graph import (
    ORDINARY,
    SPECIAL,
    NaiveGraph,
    OrientedGraph,
    VertexKind,
    cone,
    disjoint_union,
    edge_classification,
    induced_subgraph,
    is_isomorphic,
    naive_projection,
    patching,
    validate,
)
from .group import LinearOrientation, classification_report

__version__ = "0.1.0"
