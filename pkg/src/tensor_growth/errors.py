"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class TensorGrowthError(Exception):
    exit_code = 1
    kind = "error"


class DomainError(TensorGrowthError, ValueError):
    """An input violates an operation's precondition."""

    exit_code = 2
    kind = "validation"


class ResourceError(TensorGrowthError):
    """A configured size bound would be exceeded."""

    exit_code = 3
    kind = "resource"


class InvariantViolation(TensorGrowthError, RuntimeError):
    """An internal consistency check failed; this indicates a bug, not bad input."""

    exit_code = 4
    kind = "internal"
