"""Exception hierarchy shared by all subpackages."""


class LaurentError(Exception):
    """Base class for library errors."""


class ArgumentError(LaurentError, ValueError):
    pass


class NonInvertible(LaurentError, ZeroDivisionError):
    pass


class DivisionByZero(LaurentError, ZeroDivisionError):
    pass


class UnitMismatch(LaurentError, TypeError):
    """Addition of scalars carrying different pi/Omega monomials."""


class WeightError(LaurentError, ValueError):
    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f"weight mismatch: {left} vs {right}")


class InsufficientCoverage(LaurentError):
    """A table or series is too short to certify a finite sum."""

    def __init__(self, message, missing=None):
        super().__init__(message)
        self.missing = missing


class Unsupported(LaurentError):
    pass


class PoleOrderMismatch(LaurentError):
    pass


class EvaluationPole(LaurentError, ZeroDivisionError):
    pass


class ExpressionNotLevelOne(LaurentError):
    pass


class WeightBookkeeping(LaurentError):
    pass


class InvalidAction(LaurentError):
    pass


class PrecisionLoss(LaurentError):
    pass


class ContourUnreliable(LaurentError):
    pass


class SourceMismatch(LaurentError):
    """Two independent descriptions of recursion data disagree."""


class FormSyntaxError(LaurentError, ValueError):
    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")
