"""Exception types raised across the package."""


class MorphologyError(Exception):
    """Base class for every domain error raised by semimorph."""


class UnknownSemiring(MorphologyError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class CarrierMismatch(MorphologyError, TypeError):
    pass


class OrderUndefined(MorphologyError):
    pass


class NoResidual(MorphologyError):
    pass


class UnsupportedSemiring(MorphologyError):
    pass


class EmptyImage(MorphologyError, ValueError):
    pass


class ShapeMismatch(MorphologyError, ValueError):
    pass


class OutOfBounds(MorphologyError, IndexError):
    pass


class EmptyStructuringElement(MorphologyError, ValueError):
    pass


class UnsupportedFormat(MorphologyError, ValueError):
    pass


class TruncatedImage(MorphologyError, ValueError):
    pass


class ValueOutOfRange(MorphologyError, ValueError):
    pass


class ParseError(MorphologyError, ValueError):
    """A token or document field could not be parsed; carries its location."""

    def __init__(self, message, row=None, col=None):
        if row is not None:
            message = f"{message} (row {row}, col {col})"
        super().__init__(message)
        self.row = row
        self.col = col


class QuantizationNote(UserWarning):
    """A min-max value was rounded to the nearest multiple of 1/255."""
