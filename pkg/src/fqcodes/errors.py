"""Exception hierarchy.

Every error raised by the library derives from FqcodesError so callers
(and the CLI exit-code mapping) can catch one base class.
"""


class FqcodesError(Exception):
    pass


# field construction / arithmetic
class NonPrimeCharacteristic(FqcodesError):
    pass


class ReducibleModulus(FqcodesError):
    pass


class ZeroInverse(FqcodesError):
    pass


class NonDivisorDegree(FqcodesError):
    pass


class DimensionTooSmall(FqcodesError):
    pass


# linear algebra
class LengthMismatch(FqcodesError):
    pass


class AmbientMismatch(FqcodesError):
    pass


class EnumerationTooLarge(FqcodesError):
    pass


# metric sweeps
class TooFewCodewords(FqcodesError):
    pass


class SearchTooLarge(FqcodesError):
    pass


# constructions
class DivisibilityViolation(FqcodesError):
    pass


class NotFound(FqcodesError):
    pass


class InfeasibleParameters(FqcodesError):
    pass


# derived codes
class LengthTooShort(FqcodesError):
    pass


class LengthOutOfRange(FqcodesError):
    pass


class ParameterTooSmall(FqcodesError):
    pass


class PropertyViolation(FqcodesError):
    """An internal consistency re-check failed (construction bug, not user error)."""


class EmptySet(FqcodesError):
    pass


# bounds
class ParameterOutOfRange(FqcodesError):
    pass


class NonMonotoneInput(FqcodesError):
    pass


class ParityViolation(FqcodesError):
    pass


class RateTooLow(FqcodesError):
    pass


class NotLinear(FqcodesError):
    pass


# channel
class TooManyDeletions(FqcodesError):
    pass


# files / CLI
class ParseError(FqcodesError):
    pass


class InvalidParams(FqcodesError):
    pass
