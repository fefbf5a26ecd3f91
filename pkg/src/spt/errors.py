"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class SptError(Exception):
    """Base class for library errors."""


class InvalidArgument(SptError, ValueError):
    pass


class ParseError(InvalidArgument):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class OutOfScope(InvalidArgument):
    """Raised when a closed formula is requested outside its proven range."""


class ResourceLimit(SptError, RuntimeError):
    pass


class ConsistencyError(SptError, AssertionError):
    """Two independent computations that must agree did not."""
