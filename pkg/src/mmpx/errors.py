"""Exception hierarchy shared by every mmpx module."""


class MMPXError(Exception):
    """Base class for all mmpx errors."""


class DimensionMismatch(MMPXError, ValueError):
    pass


class NonConvergence(MMPXError):
    """An iteration hit its application cap without meeting its stop rule."""

    def __init__(self, message, applications=0):
        super().__init__(message)
        self.applications = applications


class NoFiniteEntry(MMPXError, ValueError):
    pass


class EmptyList(MMPXError, ValueError):
    pass


class InvalidOrder(MMPXError, ValueError):
    pass


class NotSquare(MMPXError, ValueError):
    pass


class SymbolOutOfRange(MMPXError, ValueError):
    pass


class OrderMismatch(MMPXError, ValueError):
    pass


class DegenerateSystem(MMPXError, ValueError):
    pass


class TooLarge(MMPXError, ValueError):
    pass


class InvariantViolation(MMPXError, AssertionError):
    """A proven property of the iteration failed at runtime (a bug, not bad input)."""


class ParseError(MMPXError, ValueError):
    def __init__(self, message, line=None, column=None):
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
        self.line = line
        self.column = column
