class KAdditiveError(Exception):
    """Base class for package errors."""


class GameFormatError(KAdditiveError, ValueError):
    """Malformed game, selector, permutation or sharing-function input."""


class ResourceBudgetError(KAdditiveError):
    """A computation exceeded its configured budget."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step


class NotPointedError(KAdditiveError):
    """Generator enumeration was asked for a polyhedron with a lineality space."""
