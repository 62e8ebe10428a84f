"""Custom exception hierarchy for the phase-design toolkit."""


class PhaseDesignError(Exception):
    """Base class for all toolkit-specific errors."""


class FieldError(PhaseDesignError, ValueError):
    """Raised on malformed GF(2^n) operands (width mismatch, out-of-range bits, empty polynomial)."""


class PreconditionError(PhaseDesignError, ValueError):
    """Raised when (t, n) or another parameter violates an operation's precondition."""


class InstanceTooLargeError(PhaseDesignError):
    """Raised when an enumeration, dense materialization or simulation exceeds its budget."""


class SingularShiftError(PhaseDesignError, ValueError):
    """Raised when the determinant product formula is evaluated on its singular set."""


class NonHermitianError(PhaseDesignError, ValueError):
    """Raised when a spectral routine receives a matrix that is not Hermitian."""


class InputValidationError(PhaseDesignError):
    """Raised when a key, table or state file fails schema or content validation."""


class CircuitError(PhaseDesignError):
    """Base class for circuit construction and simulation errors."""


class CircuitValidationError(CircuitError, ValueError):
    """Raised when a circuit references invalid wires or violates its structural rules."""


class CircuitParseError(CircuitError):
    """Raised when a circuit text file cannot be parsed."""

    def __init__(self, message: str, line_number: int | None = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class EntangledAncillaError(CircuitError):
    """Raised when simulated ancillas do not return to their initial constants."""


class BoundViolation(PhaseDesignError):
    """Raised in strict mode when a verified bound does not hold."""
