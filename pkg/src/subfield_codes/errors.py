"""Exception types shared across the package."""


class SubfieldError(Exception):
    """Base class for all package errors."""


class ParseError(SubfieldError, ValueError):
    pass


class NonPrime(SubfieldError, ValueError):
    pass


class ReduciblePolynomial(SubfieldError, ValueError):
    pass


class SpecMismatch(SubfieldError, ValueError):
    pass


class DivisionByZero(SubfieldError, ZeroDivisionError):
    pass


class ExponentOutOfRange(ParseError):
    pass


class GammaInBaseField(SubfieldError, ValueError):
    pass


class WrongExtensionDegree(SubfieldError, ValueError):
    pass


class LambdaTooSmall(SubfieldError, ValueError):
    pass


class LengthMismatch(SubfieldError, ValueError):
    pass


class EmptySet(SubfieldError, ValueError):
    pass


class NotADivisor(SubfieldError, ValueError):
    pass


class DependentPoints(SubfieldError, ValueError):
    pass


class LengthExceedsDegree(SubfieldError, ValueError):
    pass


class RadiusOutOfRange(SubfieldError, ValueError):
    pass


class NoConvergence(SubfieldError, ArithmeticError):
    pass


class SizeTooSmall(SubfieldError, ValueError):
    pass


class NonIntegerCoefficient(SubfieldError, ArithmeticError):
    pass


class NegativeCoefficient(SubfieldError, ArithmeticError):
    pass


class NotConstantOnClass(SubfieldError, ArithmeticError):
    pass


class RoundingTooLarge(SubfieldError, ArithmeticError):
    pass


class Infeasible(SubfieldError):
    """Computation refused because of size or a violated side condition."""


class TooLarge(Infeasible):
    pass


class ConditionViolated(Infeasible):
    pass


class RankDeficientWarning(UserWarning):
    """Generator rows were linearly dependent; the dimension was reduced."""
