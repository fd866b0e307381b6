"""Exception hierarchy shared by every subpackage."""


class IntervalError(ArithmeticError):
    """Base class for failures of rigorous interval computations."""


class InvalidInterval(IntervalError, ValueError):
    """Endpoints are NaN, infinite, or out of order."""


class IntervalOverflow(IntervalError, OverflowError):
    """An endpoint left the finite binary64 range."""


class ZeroInDenominator(IntervalError, ZeroDivisionError):
    """Division by an interval that contains zero."""


class DomainError(IntervalError, ValueError):
    """An elementary function was applied outside its domain."""


class DerivativeContainsZero(IntervalError):
    """The derivative enclosure over the current interval contains zero."""


class DegenerateDenominator(ZeroInDenominator):
    """A scalar denominator of a higher-order correction encloses zero."""


class ParseError(ValueError):
    """Malformed expression text; ``pos`` is the 0-based offending offset."""

    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} at position {pos}"
        super().__init__(message)


class NonDifferentiable(ValueError):
    """The expression contains a node without a derivative rule."""
