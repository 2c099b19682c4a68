"""
Domain Exceptions: Custom exceptions for domain layer.

These exceptions represent physics- and numerics-level error conditions.
"""


class DomainException(Exception):
    """Base exception for domain layer."""

    pass


class ParameterDomainError(DomainException):
    """Raised when a physical parameter lies outside its valid domain."""

    pass


class DegenerateModelError(DomainException):
    """Raised when the model has no well-defined value (e.g. zero total rate)."""

    pass


class UndefinedBoundError(DomainException):
    """Raised when a witness bound is zero (vanishing mean spin)."""

    pass


class NumericalFailureError(DomainException):
    """Raised when a computation produces non-finite or non-physical values."""

    pass


class StabilityError(NumericalFailureError):
    """Raised when an integration step violates the stability guard."""

    pass


class NoInversionError(DomainException):
    """Raised when a readout cannot be inverted to a spin estimate."""

    pass


class EstimationError(DomainException):
    """Raised when witnesses cannot be estimated from samples."""

    pass
