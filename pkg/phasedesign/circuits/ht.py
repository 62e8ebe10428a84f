"""HT circuits: one Hadamard layer followed only by Toffoli gates."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import FrozenSet, Optional, Tuple

import numpy as np

from ..constants import SIM_AMPLITUDE_TOL, SIM_MAX_CELLS, SIM_MAX_QUBITS, SIM_MAX_SUPERPOSED_QUBITS
from ..exceptions import CircuitValidationError, EntangledAncillaError, InstanceTooLargeError
from ..types import StateVector
from .classical import ClassicalCircuit, Gate, GateKind, layer_depth, tof
from .compiler import compile_to_toffoli, reverse_circuit

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class HTCircuit:
    """Hadamards on ``hadamards`` first, then ``body``.

    Qubits start in |0> except ``const1`` and ``kick``, which start in |1>;
    the kick qubit is also Hadamard-ed and so enters the body as |->.
    """

    num_qubits: int
    data: Tuple[int, ...]
    hadamards: FrozenSet[int]
    body: Tuple[Gate, ...]
    const1: Optional[int] = None
    kick: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "data", tuple(self.data))
        object.__setattr__(self, "hadamards", frozenset(self.hadamards))
        object.__setattr__(self, "body", tuple(self.body))
        qubits = range(self.num_qubits)
        for q in (*self.data, *self.hadamards):
            if q not in qubits:
                raise CircuitValidationError(f"qubit {q} out of range for {self.num_qubits} qubits")
        if len(set(self.data)) != len(self.data):
            raise CircuitValidationError(f"repeated data qubit in {self.data}")
        for name, q in (("CONST1", self.const1), ("KICK", self.kick)):
            if q is not None and (q not in qubits or q in self.data):
                raise CircuitValidationError(f"{name} qubit {q} must be an ancilla in range")
        if self.const1 is not None and self.const1 in self.hadamards:
            raise CircuitValidationError("the constant-1 qubit cannot carry a Hadamard")
        if self.kick is not None and self.kick not in self.hadamards:
            raise CircuitValidationError("the kickback qubit needs a Hadamard")
        for position, gate in enumerate(self.body):
            if gate.kind is not GateKind.TOF:
                raise CircuitValidationError(f"body gate {position} ({gate}) is not a Toffoli")
            for q in gate.wires:
                if q not in qubits:
                    raise CircuitValidationError(f"body gate {position} ({gate}) uses qubit {q} out of range")

    @property
    def n(self) -> int:
        return len(self.data)

    @property
    def ones(self) -> FrozenSet[int]:
        return frozenset(q for q in (self.const1, self.kick) if q is not None)

    @property
    def size(self) -> int:
        return len(self.hadamards) + len(self.body)

    @property
    def body_depth(self) -> int:
        return layer_depth(self.body)

    @property
    def depth(self) -> int:
        """The Hadamard layer is its own layer; Toffolis never join it."""
        return (1 if self.hadamards else 0) + self.body_depth


def build_gbin_circuit(fc: ClassicalCircuit) -> HTCircuit:
    """HT circuit preparing the binary phase state of the single-bit function fc.

    The body computes f into the compiled ancillas, kicks f(x) into the |->
    qubit with TOF(out, out, kick), then replays the compute gates in reverse
    so every ancilla returns to its constant.
    """
    if len(fc.outputs) != 1:
        raise CircuitValidationError(f"G_bin needs a single-bit output, got {len(fc.outputs)} outputs")
    compiled = compile_to_toffoli(fc)
    out = compiled.outputs[0]
    kick = compiled.num_wires
    const1 = next(iter(compiled.ones), None)
    body = (*compiled.gates, tof(out, out, kick), *reverse_circuit(compiled).gates)
    data = tuple(range(fc.num_inputs))
    circuit = HTCircuit(
        num_qubits=compiled.num_wires + 1,
        data=data,
        hadamards=frozenset(data) | {kick},
        body=body,
        const1=const1,
        kick=kick,
    )
    logger.debug(
        "G_bin: %d qubits, compiled size %d depth %d, HT size %d depth %d",
        circuit.num_qubits, compiled.size, compiled.depth, circuit.size, circuit.depth,
    )
    return circuit


def simulate_ht(c: HTCircuit) -> StateVector:
    """State of the data qubits after running c.

    Only Hadamard-ed qubits are ever in superposition, so the simulation
    tracks one classical basis state per Hadamard branch and applies each
    Toffoli as a permutation of those basis states. Ancillas must end on
    their initial constants and the kick qubit must factor out as |->.
    """
    h = sorted(c.hadamards)
    if len(h) > SIM_MAX_SUPERPOSED_QUBITS:
        raise InstanceTooLargeError(f"{len(h)} Hadamard qubits exceed {SIM_MAX_SUPERPOSED_QUBITS}")
    if c.num_qubits > SIM_MAX_QUBITS:
        raise InstanceTooLargeError(f"{c.num_qubits} qubits exceed {SIM_MAX_QUBITS}")
    cells = (1 << len(h)) * c.num_qubits
    if cells > SIM_MAX_CELLS:
        raise InstanceTooLargeError(
            f"{1 << len(h)} branches x {c.num_qubits} qubits = {cells} cells exceed {SIM_MAX_CELLS}"
        )

    branches = np.arange(1 << len(h), dtype=np.int64)
    bits = np.zeros((branches.size, c.num_qubits), dtype=bool)
    for q in c.ones:
        bits[:, q] = True
    signs = np.ones(branches.size)
    for j, q in enumerate(h):
        branch_bit = ((branches >> j) & 1).astype(bool)
        if bits[0, q]:
            # H|1> = (|0> - |1>)/sqrt(2)
            signs[branch_bit] *= -1.0
        bits[:, q] = branch_bit

    initial = bits.copy()
    for gate in c.body:
        a, b, t = gate.wires
        bits[:, t] ^= bits[:, a] & bits[:, b]

    spectators = [q for q in range(c.num_qubits) if q not in c.data and q != c.kick]
    if spectators:
        moved = np.any(bits[:, spectators] != initial[:, spectators], axis=1)
        if np.any(moved):
            raise EntangledAncillaError(f"{int(moved.sum())} branches leave ancillas off their constants")

    weights = np.int64(1) << np.arange(c.n, dtype=np.int64)
    index = bits[:, list(c.data)].astype(np.int64) @ weights
    dim = 1 << c.n
    if c.kick is None:
        state = np.zeros(dim)
        np.add.at(state, index, signs)
        state *= 2.0 ** (-len(h) / 2)
    else:
        kicked = bits[:, c.kick]
        zero, one = np.zeros(dim), np.zeros(dim)
        np.add.at(zero, index[~kicked], signs[~kicked])
        np.add.at(one, index[kicked], signs[kicked])
        if np.max(np.abs(one + zero)) > SIM_AMPLITUDE_TOL:
            raise EntangledAncillaError("kickback qubit is not left in |->")
        # tracing out |-> = (|0> - |1>)/sqrt(2) leaves sqrt(2) * amp(x, 0)
        state = zero * 2.0 ** (-(len(h) - 1) / 2)
    return StateVector(amplitudes=state.astype(np.complex128), n=c.n)
