"""Exception hierarchy shared by every drazinlab module."""


class DrazinLabError(Exception):
    """Base class for all library errors."""


class ParseError(DrazinLabError, ValueError):
    pass


class FieldMismatch(DrazinLabError, ValueError):
    pass


class DimensionMismatch(DrazinLabError, ValueError):
    pass


class NonSquare(DimensionMismatch):
    pass


class ZeroDenominator(DrazinLabError, ZeroDivisionError):
    pass


class DivisionByZero(DrazinLabError, ZeroDivisionError):
    pass


class Singular(DrazinLabError, ArithmeticError):
    pass


class NoGroupInverse(DrazinLabError, ArithmeticError):
    pass


class ConditionsNotMet(DrazinLabError):
    """The pair does not satisfy a^2 b = aba and b^2 a = bab."""


class NotCommuting(ConditionsNotMet):
    pass


class SpaceTooLarge(DrazinLabError):
    pass


class ExhaustedAttempts(DrazinLabError):
    pass


class NonUnique(DrazinLabError, AssertionError):
    """More than one (or no) candidate passed the definitional Drazin test."""
