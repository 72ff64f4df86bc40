"""Exceptions"""

__all__ = [
    'BinCumulantsError', 'ValidationError', 'CoordinateError', 'SchemaError',
    'AlgebraError', 'UnsupportedSizeError', 'ModelError', 'OptimizationError'
]


class BinCumulantsError(Exception):
    """Base class of every error raised by this package."""
    kind = 'error'


class ValidationError(BinCumulantsError, ValueError):
    """Exception raised when invalid data is encountered."""
    kind = 'validation'


class CoordinateError(ValidationError):
    """Raised when a table carries the wrong coordinate tag,
    or violates the normalization of its coordinate system
    (``sum p = 1``, ``mu_0 = 1`` or ``k_0 = 0``).
    """
    kind = 'coordinates'

    def __init__(self, msg, expected=None, got=None):
        if expected is not None:
            msg = 'Expected {} coordinates, got {}. {}'.format(expected, got, msg)
        super().__init__(msg.strip())


class SchemaError(ValidationError):
    """SchemaError exception is raised when an input document fails validation.

    Common failures include:

        - subset keys that are not strictly increasing digits in ``1..n``
        - entries that do not parse as rationals
        - unknown coordinate tags
    """
    kind = 'schema'

    def __init__(self, msg='', name=None, value=None):
        if name is not None:
            msg = 'Invalid entry {}: {!r}. {}'.format(name, value, msg)
        super().__init__(msg.strip())
        self.name = name
        self.value = value


class AlgebraError(BinCumulantsError, ArithmeticError):
    """Raised on ring or size mismatches, bad constant terms and unbound variables"""
    kind = 'algebra'


class UnsupportedSizeError(BinCumulantsError, ValueError):
    """Raised when ``n`` lies outside the range an operation supports"""
    kind = 'unsupported-size'

    def __init__(self, n, low, high, what=''):
        msg = 'n={} is not supported{}; expected {} <= n <= {}'.format(
            n, ' by {}'.format(what) if what else '', low, high)
        super().__init__(msg)
        self.n = n


class ModelError(ValidationError):
    """Raised for malformed model descriptions and unknown generator fixtures"""
    kind = 'model'


class OptimizationError(BinCumulantsError, RuntimeError):
    """Raised when the analytic gradient disagrees with finite differences"""
    kind = 'optimization'
