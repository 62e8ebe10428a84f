"""Binary and complex phase states, k-wise independent keys and their HT circuits."""

from .exceptions import PhaseDesignError
from .types import FieldElement, FieldModulus, KWiseKey, PhaseFunction, RunConfig, StateVector

__version__ = "0.1.0"

__all__ = [
    "FieldElement",
    "FieldModulus",
    "KWiseKey",
    "PhaseDesignError",
    "PhaseFunction",
    "RunConfig",
    "StateVector",
]
