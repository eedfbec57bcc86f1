class BraidOscError(Exception):
    """Base class for every error raised by braidosc."""


class ScalarError(BraidOscError, ArithmeticError):
    """Invalid scalar arithmetic: division by ~0, q = 1, negative q-numbers."""


class BackendError(BraidOscError):
    """The requested operation is not representable in the selected backend."""


class ContextMismatch(BraidOscError, ValueError):
    """Two weight vectors built over different labels or backends were combined."""


class InvariantViolation(BraidOscError):
    """A structural check failed: a dimension, residual, rank or Gram solve."""

    def __init__(self, message, **details):
        super().__init__(message)
        self.details = details


class RouteDisagreement(InvariantViolation):
    """Two computation routes produced different braid matrices."""

    def __init__(self, message, generator=None, row=None, column=None, left=None, right=None, deviation=None):
        super().__init__(message, generator=generator, row=row, column=column,
                         left=left, right=right, deviation=deviation)
        self.generator = generator
        self.row = row
        self.column = column
        self.left = left
        self.right = right
        self.deviation = deviation


class InvalidParameter(BraidOscError, ValueError):
    """A label, index or parameter outside its documented range."""
