"""Exception types raised by the solvers and the command-line front end."""


class MSRError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidInputError(MSRError):
    """Non-finite coordinates or otherwise malformed point data."""


class DimensionMismatchError(InvalidInputError):
    """Points of differing dimension, or a dimension outside 2..8."""


class EmptySetError(MSRError):
    """An operation that needs at least one point received none."""


class PreconditionError(MSRError):
    pass


class UnsupportedDimensionError(MSRError):
    """The requested solver does not handle this dimension (k=3 is planar only)."""


class SizeGuardError(MSRError):
    """Instance too large for exhaustive enumeration without an explicit override."""
