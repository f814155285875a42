"""
Exception taxonomy shared by all graph modules.
"""


class GraphError(ValueError):
    """Base class for invalid graph data or parameters."""


class InvalidVertex(GraphError):
    pass


class InvalidEdge(GraphError):
    pass


class MissingEdge(GraphError):
    pass


class InvalidParams(GraphError):
    pass


class NonLinearInput(GraphError):
    pass


class TooLarge(GraphError):
    """Raised when an exhaustive routine is asked for a size it refuses to search."""


class GraphFormatError(GraphError):
    """Malformed edge-list, graph6 or hypergraph text."""
