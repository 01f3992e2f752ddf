"""Exception hierarchy shared by every module of the package."""


class MaxBlankError(Exception):
    """Base class for all errors raised by :mod:`maxblank`."""


class AlgebraMismatchError(MaxBlankError, TypeError):
    """A value or container does not belong to the algebra it is used with."""


class NotTotallyOrderedError(MaxBlankError):
    """An operation that needs a total order was called on a lattice without one."""


class DimensionMismatchError(MaxBlankError, ValueError):
    """Matrix and vector shapes are not conformable."""


class TermBudgetExceededError(MaxBlankError):
    """The number of choice functions to explore exceeds the configured cap."""


class CarrierNotFiniteError(MaxBlankError):
    """Exhaustive enumeration was requested over an infinite carrier."""


class EnumerationTooLargeError(MaxBlankError):
    """Exhaustive enumeration would visit more points than the configured limit."""


class LiteralParseError(MaxBlankError, ValueError):
    """A textual element literal or algebra descriptor could not be parsed."""
