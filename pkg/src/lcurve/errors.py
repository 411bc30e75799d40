"""Exception hierarchy shared by the library and the command line tool."""

from __future__ import annotations


class LCurveError(Exception):
    """Base class.  ``exit_code`` is what the CLI returns for it."""

    exit_code = 2

    @property
    def kind(self) -> str:
        return type(self).__name__


class InputError(LCurveError):
    exit_code = 2


class NotPrime(InputError):
    pass


class EvenCharacteristic(InputError):
    pass


class ReducibleModulus(InputError):
    pass


class FieldMismatch(InputError):
    pass


class DivisionByZero(InputError, ZeroDivisionError):
    pass


class ZeroPolynomial(InputError):
    pass


class ConstantPolynomial(InputError):
    pass


class EvenDegree(InputError):
    pass


class DegreeTooSmall(InputError):
    pass


class NotSeparable(InputError):
    pass


class OutOfRange(InputError):
    pass


class ParseError(InputError):
    pass


class NonIntegralCoefficient(InputError):
    pass


class WeilBoundViolated(InputError):
    pass


class InvalidLPolynomial(InputError):
    pass


class BudgetExceeded(LCurveError):
    exit_code = 3

    def __init__(self, required: int, budget: int):
        super().__init__(f"enumeration needs {required} evaluations, budget is {budget}")
        self.required = required
        self.budget = budget


class VerificationFailed(LCurveError):
    """A check that should hold unconditionally did not; indicates a bug."""

    exit_code = 1


class CongruenceFailed(VerificationFailed):
    pass
