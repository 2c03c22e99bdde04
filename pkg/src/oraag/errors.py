"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class OraagError(Exception):
    """Base class for every error raised by this package."""


class InvalidGraphError(OraagError):
    """Raw graph data violates one or more oriented-graph invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid oriented graph: {lines}")


class UnknownVertex(OraagError):
    pass


class EmptySubset(OraagError):
    pass


class DuplicateVertex(OraagError):
    pass


class IncompatibleOverlap(OraagError):
    pass


class TooLarge(OraagError):
    pass


class Disconnected(OraagError):
    pass


class NotElementaryType(OraagError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"graph is not of elementary type: {witness}")


class NotChordal(OraagError):
    pass


class NotSpeciallyOriented(OraagError):
    pass


class SingleClique(OraagError):
    pass


class CapExceeded(OraagError):
    pass


class InvalidOrientation(OraagError):
    pass


class ParseError(OraagError):
    pass
