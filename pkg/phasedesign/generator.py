"""Keyed binary-phase state generators.

``KWiseBinaryPhaseGenerator`` draws a (2t)-wise independent key and turns
its 1-bit evaluation table into a binary phase state, either directly or by
simulating the G_bin HT circuit. ``kwise_moment_matrix`` averages the t-copy
moment over every key of the family.
"""

from __future__ import annotations

import logging
from typing import Callable, Optional

import numpy as np
import scipy.sparse as sp

from sd_moments.combinatorics import tuple_entries
from sd_moments.types import MomentMatrix

from .circuits import HTCircuit, build_gbin_circuit, build_kwise_circuit, simulate_ht, specialize_inputs
from .constants import DENSE_MAX_DIM
from .exceptions import InstanceTooLargeError, PreconditionError
from .kwise import all_keys_evaluations, bit_table, sample_key
from .phase_states import gen_binary_phase, phase_function
from .types import KWiseKey, PhaseFunction, StateVector

logger = logging.getLogger(__name__)

_AVERAGE_MAX_WORK = 1 << 26


class KeyedPhaseFunction:
    """Adapter from any keyed bit function ``(key, x) -> 0/1`` to phase tables.

    Carries no security claim; it only lets a pseudorandom function stand in
    for the random function of the ideal ensemble.
    """

    def __init__(self, func: Callable[[object, int], int], n: int):
        if n < 1:
            raise PreconditionError(f"n must be positive, got {n}")
        self.func = func
        self.n = n

    def table(self, key) -> PhaseFunction:
        return phase_function((int(self.func(key, x)) & 1 for x in range(1 << self.n)), 2)

    def state(self, key) -> StateVector:
        return gen_binary_phase(self.table(key))


class KWiseBinaryPhaseGenerator:
    """The (K, G) pair: key generation and binary phase state generation."""

    def __init__(self, n: int, t: int):
        if t < 1:
            raise PreconditionError(f"t must be positive, got {t}")
        self.n = n
        self.t = t
        self.k = 2 * t
        self._circuit = None

    def keygen(self, seed: Optional[int] = None) -> KWiseKey:
        return sample_key(self.n, self.k, seed)

    def phase_function(self, key: KWiseKey) -> PhaseFunction:
        self._check_key(key)
        return phase_function(bit_table(key), 2)

    def generate(self, key: KWiseKey) -> StateVector:
        return gen_binary_phase(self.phase_function(key))

    def circuit(self, key: KWiseKey) -> HTCircuit:
        """G_bin for this key: the keyed circuit with its coefficient wires pinned."""
        self._check_key(key)
        if self._circuit is None:
            self._circuit = build_kwise_circuit(self.n, self.k)
        fixed = {}
        for j, c in enumerate(key.coeffs):
            for i in range(self.n):
                fixed[self.n + j * self.n + i] = c >> i & 1
        # the 1-bit family keeps the least significant output bit
        keyed = specialize_inputs(self._circuit.with_outputs(self._circuit.outputs[:1]), fixed)
        return build_gbin_circuit(keyed)

    def generate_by_circuit(self, key: KWiseKey) -> StateVector:
        return simulate_ht(self.circuit(key))

    def _check_key(self, key: KWiseKey) -> None:
        if key.n != self.n or key.k != self.k:
            raise PreconditionError(f"key for (n={key.n}, k={key.k}) used with generator (n={self.n}, k={self.k})")


def kwise_moment_matrix(t: int, n: int) -> MomentMatrix:
    """E_key[(|psi_key><psi_key|)^(x)t] over every key of the (2t)-wise family."""
    dim = 1 << (t * n)
    if dim > DENSE_MAX_DIM:
        raise InstanceTooLargeError(f"dimension {dim} exceeds dense limit {DENSE_MAX_DIM}")
    work = (dim * t) << (2 * t * n)
    if work > _AVERAGE_MAX_WORK:
        raise InstanceTooLargeError(f"averaging over every key needs {work} products (limit {_AVERAGE_MAX_WORK})")
    signs = 1.0 - 2.0 * (all_keys_evaluations(n, 2 * t) & np.uint64(1)).astype(np.float64)
    entries = tuple_entries(np.arange(dim), t, n)
    # phi[key, x] = prod_i (-1)^f_key(x_i)
    phi = np.prod(signs[:, entries], axis=2)
    dense = (phi.T @ phi) / (signs.shape[0] * dim)
    matrix = sp.csr_matrix(dense.astype(np.complex128))
    matrix.eliminate_zeros()
    matrix.sort_indices()
    logger.info("k-wise moment t=%d n=%d averaged over %d keys", t, n, signs.shape[0])
    return MomentMatrix("kwise", t, n, matrix)
