"""Binary-phase and complex-phase state vectors built from a phase table."""

from __future__ import annotations

import logging
from typing import Iterable

import numpy as np

from .exceptions import PreconditionError
from .types import PhaseFunction, StateVector

logger = logging.getLogger(__name__)

_QUARTER_TURNS = np.array([1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j])


def phase_function(table: Iterable[int], modulus: int) -> PhaseFunction:
    return PhaseFunction(table=tuple(int(v) for v in table), modulus=modulus)


def roots_of_unity(values: np.ndarray, modulus: int) -> np.ndarray:
    """omega_modulus ** values, exact on multiples of a quarter turn."""
    values = np.asarray(values, dtype=np.int64) % modulus
    phases = np.exp(2j * np.pi * (values / modulus))
    if modulus % 4 == 0 or modulus in (1, 2):
        quarter = (4 * values) % modulus == 0
        phases[quarter] = _QUARTER_TURNS[(4 * values[quarter]) // modulus]
    return phases


def gen_binary_phase(f: PhaseFunction) -> StateVector:
    """2^(-n/2) * sum_x (-1)^f(x) |x>."""
    if f.modulus != 2:
        raise PreconditionError(f"binary phase needs modulus 2, got {f.modulus}")
    signs = 1.0 - 2.0 * np.asarray(f.table, dtype=np.float64)
    amplitudes = (signs * 2.0 ** (-f.n / 2)).astype(np.complex128)
    return StateVector(amplitudes=amplitudes, n=f.n)


def gen_complex_phase(f: PhaseFunction) -> StateVector:
    """2^(-n/2) * sum_x omega_{2^n}^f(x) |x>."""
    if f.modulus != 1 << f.n:
        raise PreconditionError(f"complex phase needs modulus 2^{f.n}, got {f.modulus}")
    amplitudes = roots_of_unity(np.asarray(f.table), f.modulus) * 2.0 ** (-f.n / 2)
    return StateVector(amplitudes=amplitudes, n=f.n)


def random_phase_function(n: int, modulus: int, seed=None) -> PhaseFunction:
    """Uniformly random table; the truly random function of the moment averages."""
    rng = np.random.default_rng(seed)
    return phase_function(rng.integers(0, modulus, size=1 << n), modulus)
