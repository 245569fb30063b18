"""Exception types shared across the package."""


class LiftlabError(Exception):
    pass


class FieldError(LiftlabError, ValueError):
    """Bad field parameters, mixed fields, or division by zero."""


class DimensionError(LiftlabError, ValueError):
    pass


class DegenerateCodeError(LiftlabError, ValueError):
    """Raised when an operation would produce the zero code (e.g. dual of a full space)."""


class BudgetExceeded(LiftlabError, RuntimeError):
    """An exhaustive enumeration would exceed the configured budget."""

    def __init__(self, message, **sizes):
        super().__init__(message)
        self.sizes = sizes


class EmptyDesignError(LiftlabError, ValueError):
    """No codeword has the requested weight, so there are no blocks."""
