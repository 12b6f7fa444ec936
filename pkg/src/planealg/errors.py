"""Exception types shared across the package."""


class PlaneFormatError(ValueError):
    """Raised when an incidence description is structurally invalid."""


class UncheckedPlaneError(RuntimeError):
    """Raised when an operation requires a plane whose axioms were not verified."""


class FieldError(ValueError):
    """Raised when a finite field cannot be constructed as requested."""


class ClosureError(RuntimeError):
    """A composite element fell outside an enumerated set.

    Signals either a broken enumeration or an input on which the expected
    closure property genuinely fails; the message names the offending pair.
    """


class RecoveryError(RuntimeError):
    """Dilation recovery from an endomorphism violated a postcondition."""
