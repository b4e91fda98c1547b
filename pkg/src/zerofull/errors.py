"""Exception hierarchy shared by all modules."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PreconditionError(ValueError):
    """A hypothesis required by an operation does not hold.

    ``marker`` names the failed hypothesis (e.g. ``"NotApplicable"`` for a
    ball radius outside the classifier's range) so callers can branch on it.
    """

    def __init__(self, message, marker=None):
        super().__init__(message)
        self.marker = marker


class ResourceError(RuntimeError):
    """A configured enumeration or census cap would be exceeded."""

    def __init__(self, message, cap=None):
        super().__init__(message)
        self.cap = cap


class DegenerateFitError(ValueError):
    """Not enough usable rows to fit a growth exponent."""
