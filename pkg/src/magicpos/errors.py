"""Exception types raised by the library."""


class MagicError(ValueError):
    """Base class for domain errors."""


class ZeroPolynomialError(MagicError):
    pass


class ZeroDilationError(MagicError):
    pass


class NonPositiveCoefficientsError(MagicError):
    pass


class InvalidParametersError(MagicError):
    pass


class TooLargeError(MagicError):
    """Lattice enumeration would exceed the point-count guard."""


class UnsupportedGenericError(MagicError):
    pass


class NegativeInputError(MagicError):
    pass


class NotCLError(MagicError):
    pass
