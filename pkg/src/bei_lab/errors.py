"""Exception hierarchy shared by the engine and the CLI."""


class BeiLabError(Exception):
    """Base class for all errors raised by bei_lab."""

    exit_code = 1


class InputError(BeiLabError, ValueError):
    """Malformed input: bad vertex ids, loops, unparsable graph files."""

    exit_code = 2

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DomainError(BeiLabError, ValueError):
    """An operation was called outside its mathematical domain."""

    exit_code = 2


class UnsupportedSizeError(BeiLabError):
    """The input exceeds a hard size cap of an exhaustive search."""

    exit_code = 3


class TheoremViolation(BeiLabError, AssertionError):
    """Two independent routes disagreed on a value that must coincide."""

    exit_code = 1
