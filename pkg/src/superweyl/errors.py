"""Exception hierarchy shared by the library and the command line."""


class SuperWeylError(Exception):
    """Base class; ``reason`` is a short machine-readable tag."""

    reason = "error"

    def __init__(self, message, reason=None):
        super().__init__(message)
        if reason is not None:
            self.reason = reason


class InvalidInput(SuperWeylError, ValueError):
    reason = "invalid-input"


class Unsupported(SuperWeylError):
    reason = "unsupported"


class DimensionLimit(Unsupported):
    reason = "dimension-limit"


class InvariantViolation(SuperWeylError, AssertionError):
    reason = "invariant-violation"
