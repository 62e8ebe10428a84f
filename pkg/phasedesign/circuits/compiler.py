"""Rewrite NOT/XOR/AND gates as Toffoli gates over one shared constant-1 wire."""

from __future__ import annotations

import logging
from typing import List, Mapping, Optional

from ..exceptions import CircuitValidationError
from .classical import ClassicalCircuit, Gate, GateKind, tof

logger = logging.getLogger(__name__)

# Each source gate becomes exactly one Toffoli; demoted constant-1 wires add one each.
TOFFOLI_PER_GATE = 1


def const_one_wire(c: ClassicalCircuit) -> Optional[int]:
    """The lowest constant-1 ancilla that no gate writes, if any."""
    written = {g.target for g in c.gates}
    stable = sorted(w for w in c.ones if w not in written)
    return stable[0] if stable else None


def compile_to_toffoli(c: ClassicalCircuit) -> ClassicalCircuit:
    """Semantically equivalent Toffoli-only circuit with at most one constant-1 wire.

    NOT w becomes TOF(one, one, w), XOR(a, b) becomes TOF(a, one, b) and
    AND(a, b, c) becomes TOF(a, b, c) on its fresh 0-ancilla. Any further
    constant-1 wire is demoted to a 0-ancilla set by a leading TOF(one, one, w).
    """
    needs_one = bool(c.ones) or any(g.kind in (GateKind.NOT, GateKind.XOR) for g in c.gates)
    num_wires = c.num_wires
    one = const_one_wire(c)
    if needs_one and one is None:
        one = num_wires
        num_wires += 1

    gates: List[Gate] = [tof(one, one, w) for w in sorted(c.ones) if w != one]
    for gate in c.gates:
        w = gate.wires
        if gate.kind is GateKind.NOT:
            gates.append(tof(one, one, w[0]))
        elif gate.kind is GateKind.XOR:
            gates.append(tof(w[0], one, w[1]))
        else:
            gates.append(tof(*w))

    ones = frozenset() if one is None else frozenset({one})
    compiled = ClassicalCircuit(c.num_inputs, num_wires, gates, c.outputs, ones)
    logger.debug("compiled %d gates into %d Toffoli gates (const-1 wire %s)", c.size, compiled.size, one)
    return compiled


def reverse_circuit(c: ClassicalCircuit) -> ClassicalCircuit:
    """The gate list reversed; the inverse of a Toffoli-only circuit."""
    if not c.is_toffoli_only:
        raise CircuitValidationError("only Toffoli-only circuits are reversed gate by gate")
    return ClassicalCircuit(c.num_inputs, c.num_wires, list(reversed(c.gates)), c.outputs, c.ones)


def specialize_inputs(c: ClassicalCircuit, fixed: Mapping[int, int]) -> ClassicalCircuit:
    """Turn the given input wires into constant ancillas.

    Remaining inputs keep their order and are renumbered from 0; fixed
    inputs follow them as ancillas (constant-1 where the fixed bit is 1),
    then the original ancillas.
    """
    for w, bit in fixed.items():
        if not 0 <= w < c.num_inputs:
            raise CircuitValidationError(f"wire {w} is not an input")
        if bit not in (0, 1):
            raise CircuitValidationError(f"fixed value for wire {w} must be 0 or 1, got {bit}")
    free = [w for w in range(c.num_inputs) if w not in fixed]
    pinned = sorted(fixed)
    order = free + pinned + list(range(c.num_inputs, c.num_wires))
    remap = {old: new for new, old in enumerate(order)}

    gates = [Gate(g.kind, tuple(remap[w] for w in g.wires)) for g in c.gates]
    ones = {remap[w] for w in c.ones} | {remap[w] for w in pinned if fixed[w]}
    outputs = tuple(remap[w] for w in c.outputs)
    return ClassicalCircuit(len(free), c.num_wires, gates, outputs, frozenset(ones))
