"""Exception hierarchy shared by every module of the package."""


class LcdHullError(Exception):
    """Base class for all errors raised by lcdhull."""


# -- finite fields ---------------------------------------------------------
class NotPrime(LcdHullError, ValueError):
    pass


class ReducibleModulus(LcdHullError, ValueError):
    pass


class DegreeMismatch(LcdHullError, ValueError):
    pass


class NoTableEntry(LcdHullError, KeyError):
    pass


class NotMonic(LcdHullError, ValueError):
    pass


class DivisionByZero(LcdHullError, ZeroDivisionError):
    pass


class FieldMismatch(LcdHullError, ValueError):
    pass


class NotSquareField(LcdHullError, ValueError):
    pass


# -- matrices and codes ----------------------------------------------------
class NotSquare(LcdHullError, ValueError):
    pass


class DimensionMismatch(LcdHullError, ValueError):
    pass


class ZeroCode(LcdHullError, ValueError):
    pass


class ZeroEntry(LcdHullError, ValueError):
    pass


class InternalInconsistency(LcdHullError, RuntimeError):
    """Two independent computations of the same quantity disagree."""


class BudgetExceeded(LcdHullError, RuntimeError):
    pass


# -- polynomial invariants -------------------------------------------------
class NonIntegralInterpolation(InternalInconsistency):
    pass


class NotDivisible(LcdHullError, ValueError):
    pass


class NonPolynomialResult(LcdHullError, ValueError):
    pass


class NotBinary(LcdHullError, ValueError):
    pass


class NotTernary(LcdHullError, ValueError):
    pass


class NotPowerOfTwo(InternalInconsistency):
    pass


class NotPowerOfThree(InternalInconsistency):
    pass


# -- LCD transforms --------------------------------------------------------
class FieldTooSmall(LcdHullError, ValueError):
    pass


class GridExhausted(InternalInconsistency):
    """The grid search ran dry where a witness is guaranteed to exist."""


class NoWitnessFound(LcdHullError):
    """Exhaustive search found no witness (only possible outside the guarantee)."""


class InvalidParameters(LcdHullError, ValueError):
    pass
