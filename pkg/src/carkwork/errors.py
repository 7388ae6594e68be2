"""Typed domain errors shared by the library, CLI and service."""


class DomainError(ValueError):
    """Base for errors caused by out-of-domain inputs (CLI exit 1, HTTP 422)."""

    code = "domain_error"

    def __init__(self, message, code=None):
        super().__init__(message)
        if code is not None:
            self.code = code

    @property
    def message(self):
        return self.args[0]


class IdentityHasNoForm(DomainError):
    code = "identity_has_no_form"


class FormClassError(DomainError):
    """Raised when a form of the wrong class reaches an operation."""

    code = "form_class_error"


class SpineError(DomainError):
    """Raised when a non-spinal form or a foreign target reaches spine machinery."""

    code = "spine_error"


class GeodesicError(DomainError):
    code = "geodesic_error"


class SolveError(DomainError):
    code = "solve_error"


class DepthError(DomainError):
    code = "depth_error"


class StepLimitExceeded(RuntimeError):
    """Internal safety valve: a reduction or search exceeded its step cap."""
