"""Exception hierarchy shared across the library and the CLI."""


class ModascentError(Exception):
    """Base class for all errors raised by this package."""


class ContextError(ModascentError):
    """Operands live in different rings or free modules of different rank."""


class DomainError(ModascentError):
    """The input is outside the mathematical domain of the operation."""


class HomogeneityError(ModascentError):
    """A graded computation received inhomogeneous input."""


class UnsupportedInputError(ModascentError):
    """The input is valid but outside the supported computable fragment."""


class InternalError(ModascentError):
    """An internal invariant failed; indicates a bug, not bad input."""


class ParseError(ModascentError):
    """Syntax error in the session DSL or in polynomial text."""

    def __init__(self, message, line=None, col=None):
        super().__init__(message)
        self.line = line
        self.col = col

    def __str__(self):
        base = super().__str__()
        if self.line is not None:
            return f"{base} (line {self.line}, column {self.col})"
        return base


class UnboundNameError(ModascentError):
    """A session statement refers to a name that was never bound."""


class DuplicateRingError(ModascentError):
    """A session declared more than one ring."""
