"""Exception types shared across the package."""


class GrundyError(Exception):
    """Base class for all package errors."""


class GraphError(GrundyError, ValueError):
    """Malformed graph input or an operator applied outside its domain."""


class ColoringError(GrundyError, ValueError):
    """A coloring that does not fit the graph or the requested check."""


class SizeLimitError(GrundyError, ValueError):
    """Instance larger than an exhaustive routine is willing to handle."""


class DomainError(GrundyError, ValueError):
    """Parameters outside the validity domain of a closed-form value."""


class BudgetExhausted(GrundyError, RuntimeError):
    """A search hit its node or time limit before reaching a verdict.

    ``lower_bound`` and ``witness`` carry whatever the search had proven so
    far; they are never a claim of optimality.
    """

    def __init__(self, message, lower_bound=0, witness=None, nodes=0):
        super().__init__(message)
        self.lower_bound = lower_bound
        self.witness = witness
        self.nodes = nodes
