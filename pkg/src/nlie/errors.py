"""Exception hierarchy shared by every module."""


class NLieError(Exception):
    """Base class for all library errors."""


class FieldMismatchError(NLieError, ValueError):
    """Operands live over different fields or ambient spaces."""


class CapExceededError(NLieError):
    """Exhaustive enumeration was requested above the configured dimension cap."""


class PreconditionError(NLieError):
    """An operation was called outside the inputs it supports.

    Typical cases: lattice enumeration over the rationals, or asking for the
    Frattini subalgebra of a non-nilpotent algebra in characteristic zero.
    The CLI maps this to exit code 2.
    """


class ParseError(NLieError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
