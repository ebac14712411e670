"""Exception types shared by all modules."""


class TriprodError(Exception):
    """Base class for errors raised by this package."""


class InputError(TriprodError, ValueError):
    """Malformed or out-of-domain input: unregistered letters, bad tables,
    invalid JSON, zero polynomials where a nonzero one is required."""


class OperationError(TriprodError, ValueError):
    """Operation not available in the requested mode, e.g. the middle
    product in dimonoid/dialgebra mode."""
