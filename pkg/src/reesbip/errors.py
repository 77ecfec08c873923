"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class ReesError(Exception):
    """Base class for every error raised by reesbip."""


class GraphError(ReesError):
    """Invalid graph input."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GraphFormatError(GraphError):
    pass


class OddCycleError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class EmptyGraphError(GraphError):
    pass


class EmptyComponentError(GraphError):
    pass


class NotMaximalError(ReesError):
    pass


class SizeLimitError(ReesError):
    pass


class MalformedWalkError(ReesError):
    pass


class MalformedCircuitError(ReesError):
    pass


class DimensionMismatch(ReesError):
    pass


class OrderSpecError(ReesError):
    pass


class IncompleteTableError(ReesError):
    pass


class IncompleteWindowWarning(UserWarning):
    pass
