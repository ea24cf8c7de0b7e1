"""Exception types raised across the package."""


class AraError(ValueError):
    """Invalid input to a construction, check or search."""


class BudgetExceeded(RuntimeError):
    """A bounded search ran out of nodes before finishing."""

    def __init__(self, message, nodes=None):
        super().__init__(message)
        self.nodes = nodes


class CapExceeded(AraError):
    """Input is larger than a hard enumeration cap."""


class MissingMetadata(AraError):
    """A complex lacks the construction record an operation relies on."""
