"""Exception types raised by affmin."""


class ValidationError(ValueError):
    """Input failed a structural or numerical precondition."""


class NotPSDError(ValidationError):
    """Matrix has an eigenvalue below the PSD tolerance."""


class InvalidStateError(ValidationError):
    """Matrix is not a valid density matrix for the declared split."""
