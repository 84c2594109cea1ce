"""Exception hierarchy.

Errors fall in three groups that the command line maps to exit codes:
configuration/usage problems (:class:`ConfigError` and field errors),
degenerate geometric input (:class:`DegenerateInput`), and everything else.
"""

from __future__ import annotations


class RatrigError(Exception):
    """Base class for all errors raised by this package."""


class FieldError(RatrigError):
    """Problems with field specifications or scalar arithmetic."""


class InvalidFieldSpec(FieldError, ValueError):
    pass


class FieldMismatch(FieldError, TypeError):
    """Operands live in different fields."""


class DivisionByZero(FieldError, ZeroDivisionError):
    pass


class ParseError(FieldError, ValueError):
    pass


class DenominatorZero(ParseError):
    pass


class ConfigError(RatrigError, ValueError):
    """Malformed input document or command configuration."""


class DegenerateForm(ConfigError):
    """A bilinear form that is not symmetric or has zero determinant."""


class NotATriangle(ConfigError):
    """Three vectors that do not sum to the zero vector."""


class PreconditionViolated(RatrigError, ValueError):
    pass


class DegenerateInput(RatrigError, ValueError):
    """Geometric input for which the requested quantity does not exist."""


class NullVector(DegenerateInput):
    """A vector of zero quadrance where a non-null one is required.

    ``which`` is the 1-based position of the offending argument.
    """

    def __init__(self, which: int, message: str | None = None):
        self.which = which
        super().__init__(message or f"argument {which} is a null vector")


class NullPoint(NullVector):
    def __init__(self, which: int, message: str | None = None):
        super().__init__(which, message or f"point {which} has a null representative")


class ZeroVector(DegenerateInput):
    pass


class IdenticalPoints(DegenerateInput):
    pass


class DegenerateTripod(DegenerateInput):
    pass


class DegenerateBasis(DegenerateInput):
    pass


class SingularTransform(DegenerateInput):
    pass
