"""Classical reversible-style circuits over NOT, XOR, AND and Toffoli gates.

Wires 0..num_inputs-1 carry the input bits (wire i holds bit i of the input
integer); every further wire is an ancilla starting at 0, or at 1 when listed
in ``ones``. Evaluation is bit-sliced: one numpy row per wire, one column per
input assignment.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from ..exceptions import CircuitValidationError, InstanceTooLargeError

logger = logging.getLogger(__name__)

# Exhaustive evaluation limit on the number of inputs
EVAL_MAX_INPUTS = 22


class GateKind(str, Enum):
    NOT = "NOT"
    XOR = "XOR"
    AND = "AND"
    TOF = "TOF"


_ARITY = {GateKind.NOT: 1, GateKind.XOR: 2, GateKind.AND: 3, GateKind.TOF: 3}


@dataclass(frozen=True, slots=True)
class Gate:
    """A gate writing its last wire. XOR(a, b) sets b ^= a; AND(a, b, c) sets c = a & b."""

    kind: GateKind
    wires: Tuple[int, ...]

    def __post_init__(self):
        if len(self.wires) != _ARITY[self.kind]:
            raise CircuitValidationError(f"{self.kind.value} takes {_ARITY[self.kind]} wires, got {self.wires}")
        if self.target in self.controls:
            raise CircuitValidationError(f"{self.kind.value} {self.wires}: target is also a control")

    @property
    def target(self) -> int:
        return self.wires[-1]

    @property
    def controls(self) -> Tuple[int, ...]:
        return self.wires[:-1]

    def __str__(self) -> str:
        return " ".join([self.kind.value, *map(str, self.wires)])


def tof(a: int, b: int, c: int) -> Gate:
    return Gate(GateKind.TOF, (a, b, c))


def layer_depth(gates: Iterable[Gate]) -> int:
    """Greedy earliest-layer assignment; gates in one layer touch disjoint wires."""
    last: Dict[int, int] = {}
    depth = 0
    for gate in gates:
        layer = 1 + max((last.get(w, 0) for w in gate.wires), default=0)
        for w in gate.wires:
            last[w] = layer
        depth = max(depth, layer)
    return depth


@dataclass(slots=True)
class ClassicalCircuit:
    num_inputs: int
    num_wires: int
    gates: List[Gate]
    outputs: Tuple[int, ...]
    ones: FrozenSet[int] = field(default_factory=frozenset)
    declared_depth: Optional[int] = None

    def __post_init__(self):
        self.outputs = tuple(self.outputs)
        self.ones = frozenset(self.ones)
        self.validate()

    def validate(self) -> None:
        if not 0 <= self.num_inputs <= self.num_wires:
            raise CircuitValidationError(f"{self.num_inputs} inputs do not fit in {self.num_wires} wires")
        for w in self.ones:
            if not self.num_inputs <= w < self.num_wires:
                raise CircuitValidationError(f"constant-1 wire {w} is not an ancilla")
        for w in self.outputs:
            if not 0 <= w < self.num_wires:
                raise CircuitValidationError(f"output wire {w} out of range")
        touched = set()
        for position, gate in enumerate(self.gates):
            for w in gate.wires:
                if not 0 <= w < self.num_wires:
                    raise CircuitValidationError(f"gate {position} ({gate}) uses wire {w} out of range")
            if gate.kind is GateKind.AND:
                c = gate.target
                if c < self.num_inputs or c in self.ones or c in touched:
                    raise CircuitValidationError(f"gate {position} ({gate}) does not target a fresh 0-ancilla")
            touched.update(gate.wires)
        if self.declared_depth is not None and self.declared_depth != self.depth:
            raise CircuitValidationError(f"declared depth {self.declared_depth} differs from layered depth {self.depth}")

    @property
    def num_ancillas(self) -> int:
        return self.num_wires - self.num_inputs

    @property
    def size(self) -> int:
        return len(self.gates)

    @property
    def depth(self) -> int:
        return layer_depth(self.gates)

    @property
    def is_toffoli_only(self) -> bool:
        return all(g.kind is GateKind.TOF for g in self.gates)

    def initial_state(self, inputs: np.ndarray) -> np.ndarray:
        """(num_wires, batch) bool matrix from a (num_inputs, batch) input matrix."""
        inputs = np.asarray(inputs, dtype=bool)
        state = np.zeros((self.num_wires, inputs.shape[1]), dtype=bool)
        state[: self.num_inputs] = inputs
        for w in self.ones:
            state[w] = True
        return state

    def run(self, state: np.ndarray, gates: Optional[Sequence[Gate]] = None) -> np.ndarray:
        """Apply gates in place to a bit-sliced wire state."""
        for gate in self.gates if gates is None else gates:
            w = gate.wires
            if gate.kind is GateKind.NOT:
                np.logical_not(state[w[0]], out=state[w[0]])
            elif gate.kind is GateKind.XOR:
                state[w[1]] ^= state[w[0]]
            elif gate.kind is GateKind.AND:
                np.logical_and(state[w[0]], state[w[1]], out=state[w[2]])
            else:
                state[w[2]] ^= state[w[0]] & state[w[1]]
        return state

    def evaluate_batch(self, inputs: np.ndarray) -> np.ndarray:
        """Output bits, shape (len(outputs), batch)."""
        state = self.run(self.initial_state(inputs))
        return state[list(self.outputs)]

    def evaluate_values(self, values: Sequence[int]) -> np.ndarray:
        """Outputs as integers (output j is bit j) for each input integer."""
        values = np.asarray(values, dtype=np.int64)
        bits = (values[None, :] >> np.arange(self.num_inputs, dtype=np.int64)[:, None]) & 1
        out = self.evaluate_batch(bits.astype(bool)).astype(np.int64)
        weights = np.int64(1) << np.arange(len(self.outputs), dtype=np.int64)
        return (out * weights[:, None]).sum(axis=0)

    def evaluate(self, value: int) -> int:
        return int(self.evaluate_values([value])[0])

    def truth_table(self) -> np.ndarray:
        """Output integer for every one of the 2^num_inputs inputs."""
        if self.num_inputs > EVAL_MAX_INPUTS:
            raise InstanceTooLargeError(f"{self.num_inputs} inputs exceed exhaustive limit {EVAL_MAX_INPUTS}")
        return self.evaluate_values(np.arange(1 << self.num_inputs))

    def with_outputs(self, outputs: Sequence[int]) -> "ClassicalCircuit":
        return ClassicalCircuit(self.num_inputs, self.num_wires, list(self.gates), tuple(outputs), self.ones)


def circuit_metrics(c) -> Tuple[int, int]:
    """(size, depth) of a classical or HT circuit."""
    return c.size, c.depth


class CircuitBuilder:
    """Allocates ancillas and records gates while a circuit is assembled."""

    def __init__(self, num_inputs: int):
        self.num_inputs = num_inputs
        self.num_wires = num_inputs
        self.gates: List[Gate] = []
        self.ones: set[int] = set()

    def fresh(self, count: int = 1, value: int = 0) -> List[int]:
        wires = list(range(self.num_wires, self.num_wires + count))
        self.num_wires += count
        if value:
            self.ones.update(wires)
        return wires

    def add(self, kind: GateKind, *wires: int) -> None:
        self.gates.append(Gate(kind, tuple(wires)))

    def copy(self, wire: int) -> int:
        target = self.fresh()[0]
        self.add(GateKind.XOR, wire, target)
        return target

    def fan_out(self, wire: int, count: int) -> List[int]:
        """``count`` wires holding the value of ``wire``, made by a doubling tree.

        The original wire is one of the returned copies.
        """
        copies = [wire]
        while len(copies) < count:
            for source in list(copies[: count - len(copies)]):
                copies.append(self.copy(source))
        return copies

    def xor_reduce(self, wires: Sequence[int]) -> int:
        """Fold the parity of dedicated wires into one of them by a balanced tree."""
        level = list(wires)
        if not level:
            return self.fresh()[0]
        while len(level) > 1:
            nxt = []
            for i in range(0, len(level) - 1, 2):
                self.add(GateKind.XOR, level[i], level[i + 1])
                nxt.append(level[i + 1])
            if len(level) % 2:
                nxt.append(level[-1])
            level = nxt
        return level[0]

    def build(self, outputs: Sequence[int]) -> ClassicalCircuit:
        return ClassicalCircuit(self.num_inputs, self.num_wires, list(self.gates), tuple(outputs), frozenset(self.ones))
