"""Shared dataclasses for the phase-design toolkit."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from .constants import STATE_NORM_TOL
from .exceptions import FieldError, InputValidationError, PreconditionError


@dataclass(frozen=True, slots=True)
class FieldElement:
    """An element of GF(2^width); bit i is the coefficient of x^i."""

    bits: int
    width: int

    def __post_init__(self):
        if self.width < 1:
            raise FieldError(f"field degree must be positive, got {self.width}")
        if self.bits < 0 or self.bits >> self.width:
            raise FieldError(f"{self.bits:#x} does not fit in {self.width} bits")

    def __int__(self) -> int:
        return self.bits


@dataclass(frozen=True, slots=True)
class FieldModulus:
    """Degree-n polynomial over GF(2) stored as an (n+1)-bit integer."""

    poly: int
    degree: int

    def __post_init__(self):
        if self.poly.bit_length() != self.degree + 1:
            raise FieldError(f"modulus {self.poly:#b} is not monic of degree {self.degree}")


@dataclass(frozen=True, slots=True)
class KWiseKey:
    """Coefficients c_0..c_{k-1} of a random degree-(k-1) polynomial over GF(2^n)."""

    coeffs: Tuple[int, ...]
    n: int
    k: int

    def __post_init__(self):
        if self.k < 1 or len(self.coeffs) != self.k:
            raise FieldError(f"key needs exactly k={self.k} >= 1 coefficients, got {len(self.coeffs)}")
        limit = 1 << self.n
        for c in self.coeffs:
            if not 0 <= c < limit:
                raise FieldError(f"coefficient {c} out of range for n={self.n}")

    @property
    def elements(self) -> Tuple[FieldElement, ...]:
        return tuple(FieldElement(c, self.n) for c in self.coeffs)

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "coeffs": list(self.coeffs)}


@dataclass(frozen=True, slots=True)
class PhaseFunction:
    """Lookup table f: {0,1}^n -> {0, ..., modulus-1}."""

    table: Tuple[int, ...]
    modulus: int

    def __post_init__(self):
        size = len(self.table)
        if size < 2 or size & (size - 1):
            raise PreconditionError(f"table length {size} is not a power of two >= 2")
        for v in self.table:
            if not 0 <= v < self.modulus:
                raise PreconditionError(f"table entry {v} outside [0, {self.modulus})")

    @property
    def n(self) -> int:
        return len(self.table).bit_length() - 1


@dataclass(frozen=True, slots=True)
class StateVector:
    """2^n unit-norm amplitudes indexed by n-bit strings."""

    amplitudes: np.ndarray
    n: int

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if amps.shape != (1 << self.n,):
            raise InputValidationError(f"expected {1 << self.n} amplitudes, got shape {amps.shape}")
        norm = float(np.vdot(amps, amps).real)
        if abs(norm - 1.0) > STATE_NORM_TOL:
            raise InputValidationError(f"state is not normalized (norm^2 = {norm!r})")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def norm(self) -> float:
        return float(np.sqrt(np.vdot(self.amplitudes, self.amplitudes).real))

    @property
    def is_real(self) -> bool:
        return not np.any(self.amplitudes.imag)

    def overlap(self, other: "StateVector") -> complex:
        """Inner product <self|other>."""
        return complex(np.vdot(self.amplitudes, other.amplitudes))


@dataclass(slots=True)
class RunConfig:
    """Resolved command-line configuration for a single subcommand."""

    subcommand: str
    n: Optional[int] = None
    t: Optional[int] = None
    k: Optional[int] = None
    seed: int = 0
    tol_rank: float = 1e-9
    tol_eig: float = 1e-10
    out: Optional[str] = None
    output_format: str = "json"
    extra: dict = field(default_factory=dict)
