"""Classical circuits for arbitrary small boolean functions via the algebraic normal form."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..exceptions import PreconditionError
from .classical import CircuitBuilder, ClassicalCircuit, GateKind


def anf_coefficients(table: Sequence[int]) -> np.ndarray:
    """Moebius transform: entry S is 1 iff the monomial prod_{i in S} x_i appears."""
    coeffs = np.array(table, dtype=np.uint8) & 1
    size = coeffs.size
    if size < 2 or size & (size - 1):
        raise PreconditionError(f"truth table length {size} is not a power of two >= 2")
    n = size.bit_length() - 1
    for i in range(n):
        view = coeffs.reshape(-1, 2, 1 << i)
        view[:, 1, :] ^= view[:, 0, :]
    return coeffs


def circuit_from_truth_table(table: Sequence[int]) -> ClassicalCircuit:
    """Single-output circuit XORing every ANF monomial into one output ancilla."""
    coeffs = anf_coefficients(table)
    n = coeffs.size.bit_length() - 1
    b = CircuitBuilder(n)
    out = b.fresh()[0]
    for subset in np.flatnonzero(coeffs).tolist():
        variables = [i for i in range(n) if subset >> i & 1]
        if not variables:
            b.add(GateKind.NOT, out)
            continue
        acc = variables[0]
        for v in variables[1:]:
            z = b.fresh()[0]
            b.add(GateKind.AND, acc, v, z)
            acc = z
        b.add(GateKind.XOR, acc, out)
    return b.build([out])
