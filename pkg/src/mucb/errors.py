"""Exception types shared across the package."""


class MucbError(Exception):
    """Base class for all errors raised by :mod:`mucb`."""


class InputError(MucbError, ValueError):
    """Invalid user-supplied parameters (mapped to CLI exit code 2)."""


class NonPrimeDimension(InputError):
    pass


class DimensionTooLarge(InputError):
    pass


class TwoIsZero(InputError):
    """Raised when a construction needs 1/2 in Z_2, where 2 == 0."""


# name used for the classification entry point
TwoIsZeroDimension = TwoIsZero


class ZeroInverse(MucbError, ZeroDivisionError):
    pass


class ModulusMismatch(MucbError, ValueError):
    pass


class DimensionMismatch(MucbError, ValueError):
    pass


class SingularAngle(InputError):
    pass


class UnphysicalCovariance(MucbError, ValueError):
    pass


class ClassificationNotConstant(MucbError, RuntimeError):
    """A label pair produced different entanglement classes for different indices."""
