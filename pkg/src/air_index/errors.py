"""Exception types shared across the package."""


class AirIndexError(Exception):
    """Base class for all package errors."""


class ParameterError(AirIndexError, ValueError):
    """(K, D) outside the supported range, or a bad argument."""


class IndexRangeError(AirIndexError, IndexError):
    """A row, column or receiver index outside the matrix."""


class PreconditionError(AirIndexError, ValueError):
    """A distance or profile was requested where it is not defined."""


class StructuralError(AirIndexError, RuntimeError):
    """The constructed matrix or plan violates an expected structural property."""


class DecodingError(AirIndexError):
    """A receiver could not recover its message."""

    def __init__(self, message: str, receiver: int | None = None):
        super().__init__(message if receiver is None else f"receiver {receiver}: {message}")
        self.receiver = receiver
