"""Exception hierarchy shared by the library and the command line."""


class LietorError(Exception):
    """Base class for every error raised by lietor."""


class InputError(LietorError, ValueError):
    """Malformed arguments: wrong dimensions, singular matrices, bad degrees."""


class PreconditionError(LietorError):
    """An operation was called on an object outside its domain."""


class JacobiError(LietorError):
    """A structure-constant table does not satisfy the Jacobi identity."""

    def __init__(self, violations):
        self.violations = violations
        first = violations[0]
        super().__init__(
            f"Jacobi identity fails on {len(violations)} triple(s), "
            f"first at basis indices {tuple(i + 1 for i in first[:3])}"
        )


class ConsistencyError(LietorError):
    """Internal invariant broken, usually by hand-written input."""


class ParseError(LietorError):
    """Document could not be parsed; ``location`` names the offending field."""

    def __init__(self, message, location=None):
        self.location = location
        if location:
            message = f"{location}: {message}"
        super().__init__(message)


class InstanceTooLarge(LietorError):
    """The requested computation exceeds the configured size cap."""
