"""Exception types shared across the package."""


class DomainError(ValueError):
    """Arguments outside an operation's stated domain."""


class NegativeIndex(DomainError):
    """A negative index where n >= 0 is required."""


class DivisionByZero(DomainError):
    """Exact polynomial division by the zero polynomial."""


class InexactDivision(ArithmeticError):
    """Polynomial long division left a nonzero remainder.

    Deliberately not a DomainError: where this package divides, the
    division is supposed to be exact, so a remainder means a bug in the
    caller and should propagate loudly rather than map to a usage error.
    """
