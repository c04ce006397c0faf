"""Exception types raised by trigpow."""


class TrigPowError(Exception):
    """Base class for all domain errors in this package."""


class NotDivisible(TrigPowError, ArithmeticError):
    """A polynomial in u has a constant term, so it is not a multiple of u."""


class OddPowerPresent(TrigPowError, ValueError):
    """An even-power substitution was requested on a polynomial with odd powers."""


class NegativeExponentUnsupported(TrigPowError, ValueError):
    """The finite binomial sum only exists for natural exponents."""


class PoleAtEvaluationPoint(TrigPowError, ArithmeticError):
    """The base function vanishes where a negative power of it is required."""


class NonIntegerNeedsPositiveBase(TrigPowError, ValueError):
    """A non-integer power was requested of a base that is not real and nonnegative."""


class InternalCancellationFailure(TrigPowError, AssertionError):
    """Expected exact divisibility by a power of v did not hold.

    This signals a bug in the engine and should never be seen in practice.
    """


class StepTooSmall(TrigPowError, ValueError):
    """Finite-difference step below the supported minimum."""


class PoleNearby(TrigPowError, ArithmeticError):
    """A finite-difference stencil would come too close to a pole."""


class DegenerateRow(TrigPowError, ValueError):
    """No second-highest power exists for the requested row."""
