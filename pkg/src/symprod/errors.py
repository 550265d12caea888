class SymprodError(Exception):
    """Base class for all errors raised by this package."""


class OrderMismatchError(SymprodError, ValueError):
    pass


class DomainError(SymprodError, ValueError):
    pass


class SeriesRangeError(SymprodError, IndexError):
    pass


class PermutationParseError(SymprodError, ValueError):
    pass


class SizeLimitError(SymprodError):
    """An enumeration or expansion exceeded its configured cap."""


class UnboundVariableError(SymprodError, KeyError):
    pass


class IntegralityError(SymprodError, ArithmeticError):
    """A quantity that must be an integer came out fractional (a bug)."""


class NoDualError(SymprodError, ValueError):
    pass


class NumericalFailureError(SymprodError, ArithmeticError):
    pass
