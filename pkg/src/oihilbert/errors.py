"""Exception types shared across the package."""


class OihError(Exception):
    """Base class for all domain errors raised by this package."""


class NonDivisible(OihError):
    """Exact polynomial division was requested but the divisor does not divide."""


class SingularAtOrigin(OihError):
    """A power-series expansion needs a denominator with nonzero constant term."""


class WidthMismatch(OihError):
    """Widths of the objects involved are incompatible."""


class SummandMismatch(OihError):
    """Free-module summand indices of the objects involved differ."""


class ZeroModule(OihError):
    """The operation is undefined for the zero module."""


class ZeroElement(OihError):
    """The operation is undefined for the zero element."""


class NotAnIdeal(OihError):
    """The operation needs rank-zero free summands (an ideal), or FI data it supports."""


class NotInLanguage(OihError):
    """The word is not a member of the language required by the operation."""


class NoStableFit(OihError):
    """The requested asymptotic fit did not stabilize inside the window."""


class NotConformant(OihError):
    """A denominator factor does not match any expected shape."""


class Column1NotEmpty(OihError):
    """The monomial involves first-column variables where none are allowed."""


class SchemaError(OihError):
    """An input document does not conform to the JSON schema."""
