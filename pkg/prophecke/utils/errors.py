"""Exception types raised by prophecke.

All of them derive from builtin exceptions so that callers which only know
about ValueError or ArithmeticError keep working.
"""


class ConfigurationError(ValueError):
    """Unsupported group label or rank, invalid q, or an invalid suite configuration."""


class PreconditionError(ValueError):
    """A documented precondition of an operation does not hold for the passed input."""


class ModeMismatchError(ValueError):
    """An operation mixed coefficient modes or needs the other mode."""


class IntegralityError(ArithmeticError):
    """A generic coefficient could not be specialized to characteristic p.

    Raised when a Laurent coefficient has odd powers of v or negative powers
    of q, i.e. when it does not lie in Z[q].
    """


class TruncationOverflow(RuntimeError):
    """A reduction in a truncated module left the truncation window."""
