"""Exception hierarchy shared by every module in the package."""


class Char2Error(Exception):
    """Base class for all package errors."""


class FieldMismatch(Char2Error, TypeError):
    pass


class DivisionByZero(Char2Error, ZeroDivisionError):
    pass


class NotASquare(Char2Error, ValueError):
    pass


class ZeroInput(Char2Error, ValueError):
    pass


class InfiniteField(Char2Error, ValueError):
    pass


class NotIrreducible(Char2Error, ValueError):
    pass


class ParseError(Char2Error, ValueError):
    pass


class SingularMatrix(Char2Error, ValueError):
    pass


class DimensionMismatch(Char2Error, ValueError):
    pass


class LimitExceeded(Char2Error, ValueError):
    """A desk-scale guardrail (degree, dimension, extension degree) was hit."""


class NotAnInvolution(Char2Error, ValueError):
    pass


class WrongParity(Char2Error, ValueError):
    pass


class InconsistentLabel(Char2Error, ValueError):
    pass


class NotSymmetric(Char2Error, ValueError):
    pass


class AlternateInput(Char2Error, ValueError):
    pass


class NotAlternate(Char2Error, ValueError):
    pass


class OddDimension(Char2Error, ValueError):
    pass


class BudgetExceeded(Char2Error, ValueError):
    pass


class UnknownTag(Char2Error, KeyError):
    pass


class VerificationError(Char2Error, AssertionError):
    """A constructed witness failed its own exact re-check."""


# aliases named after the contract vocabulary
SingularInput = SingularMatrix
ShapeMismatch = DimensionMismatch
ZeroP = ZeroInput
WrongDimension = DimensionMismatch
