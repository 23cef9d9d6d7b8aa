"""Exception types shared across the package."""


class GraphError(ValueError):
    """Base class for invalid graph input or invalid graph operations."""


class GraphFormatError(GraphError):
    """A graph6 line or edge list could not be decoded."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class UnsupportedSizeError(GraphError):
    """The graph would exceed the 62-vertex cap."""


class VertexRangeError(GraphError, IndexError):
    """A vertex index is outside ``0..n-1``."""


class NotAnEdgeError(GraphError):
    """The requested pair is not an edge of the graph."""


class DomainError(ValueError):
    """An operation was called outside the inputs it is defined for."""
