"""Line-oriented text formats for classical and HT circuits.

Classical::

    INPUTS 2; WIRES 4; ONES 3; OUT 2
    AND 0 1 2
    TOF 3 3 2

HT::

    QUBITS 5; CONST1 3; DATA 0..1; KICK 4
    H 0
    H 1
    H 4
    TOF 0 1 4

Fields are whitespace-delimited, ``#`` starts a comment, and Hadamard lines
must precede every Toffoli line.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from ..exceptions import CircuitError, CircuitParseError
from .classical import ClassicalCircuit, Gate, GateKind
from .ht import HTCircuit


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _int(token: str, number: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise CircuitParseError(f"expected a non-negative integer, got {token!r}", number) from None
    if value < 0:
        raise CircuitParseError(f"expected a non-negative integer, got {token!r}", number)
    return value


def _int_list(token: str, number: int) -> Tuple[int, ...]:
    if token == "-":
        return ()
    if ".." in token:
        lo, hi = token.split("..", 1)
        return tuple(range(_int(lo, number), _int(hi, number) + 1))
    return tuple(_int(t, number) for t in token.split(",") if t)


def _header(line: str, number: int, allowed: Tuple[str, ...]) -> Dict[str, str]:
    fields: Dict[str, str] = {}
    for part in line.split(";"):
        tokens = part.split()
        if not tokens:
            continue
        if len(tokens) != 2 or tokens[0].upper() not in allowed:
            raise CircuitParseError(f"malformed header field {part.strip()!r}", number)
        key = tokens[0].upper()
        if key in fields:
            raise CircuitParseError(f"duplicate header field {key}", number)
        fields[key] = tokens[1]
    return fields


def _gate(tokens: List[str], number: int) -> Gate:
    try:
        kind = GateKind(tokens[0].upper())
    except ValueError:
        raise CircuitParseError(f"unknown gate {tokens[0]!r}", number) from None
    try:
        return Gate(kind, tuple(_int(t, number) for t in tokens[1:]))
    except CircuitParseError:
        raise
    except CircuitError as e:
        raise CircuitParseError(str(e), number) from e


def parse_classical(text: str) -> ClassicalCircuit:
    lines = list(_lines(text))
    if not lines:
        raise CircuitParseError("empty circuit description", 1)
    number, line = lines[0]
    fields = _header(line, number, ("INPUTS", "WIRES", "ONES", "OUT", "DEPTH"))
    for key in ("INPUTS", "WIRES", "OUT"):
        if key not in fields:
            raise CircuitParseError(f"header lacks {key}", number)
    num_inputs = _int(fields["INPUTS"], number)
    num_wires = _int(fields["WIRES"], number)
    ones = _int_list(fields.get("ONES", "-"), number)
    outputs = _int_list(fields["OUT"], number)
    depth: Optional[int] = _int(fields["DEPTH"], number) if "DEPTH" in fields else None

    gates = [_gate(l.split(), n) for n, l in lines[1:]]
    try:
        return ClassicalCircuit(num_inputs, num_wires, gates, outputs, frozenset(ones), declared_depth=depth)
    except CircuitError as e:
        raise CircuitParseError(str(e), number) from e


def dump_classical(c: ClassicalCircuit) -> str:
    header = [f"INPUTS {c.num_inputs}", f"WIRES {c.num_wires}"]
    if c.ones:
        header.append("ONES " + ",".join(map(str, sorted(c.ones))))
    header.append("OUT " + (",".join(map(str, c.outputs)) or "-"))
    if c.declared_depth is not None:
        header.append(f"DEPTH {c.declared_depth}")
    return "\n".join(["; ".join(header), *map(str, c.gates)]) + "\n"


def parse_ht(text: str) -> HTCircuit:
    lines = list(_lines(text))
    if not lines:
        raise CircuitParseError("empty circuit description", 1)
    number, line = lines[0]
    fields = _header(line, number, ("QUBITS", "CONST1", "DATA", "KICK"))
    for key in ("QUBITS", "DATA"):
        if key not in fields:
            raise CircuitParseError(f"header lacks {key}", number)
    num_qubits = _int(fields["QUBITS"], number)
    data = _int_list(fields["DATA"], number)
    const1 = _int(fields["CONST1"], number) if "CONST1" in fields else None
    kick = _int(fields["KICK"], number) if "KICK" in fields else None

    hadamards: List[int] = []
    body: List[Gate] = []
    for n, l in lines[1:]:
        tokens = l.split()
        if tokens[0].upper() == "H":
            if body:
                raise CircuitParseError("Hadamard after a Toffoli gate", n)
            if len(tokens) != 2:
                raise CircuitParseError("H takes exactly one qubit", n)
            hadamards.append(_int(tokens[1], n))
        else:
            gate = _gate(tokens, n)
            if gate.kind is not GateKind.TOF:
                raise CircuitParseError(f"HT body allows only TOF, got {gate.kind.value}", n)
            body.append(gate)
    try:
        return HTCircuit(num_qubits, data, frozenset(hadamards), tuple(body), const1=const1, kick=kick)
    except CircuitError as e:
        raise CircuitParseError(str(e), number) from e


def _range_token(qubits: Tuple[int, ...]) -> str:
    if not qubits:
        return "-"
    if len(qubits) > 1 and qubits == tuple(range(qubits[0], qubits[-1] + 1)):
        return f"{qubits[0]}..{qubits[-1]}"
    return ",".join(map(str, qubits))


def dump_ht(c: HTCircuit) -> str:
    header = [f"QUBITS {c.num_qubits}"]
    if c.const1 is not None:
        header.append(f"CONST1 {c.const1}")
    header.append(f"DATA {_range_token(c.data)}")
    if c.kick is not None:
        header.append(f"KICK {c.kick}")
    lines = ["; ".join(header)]
    lines += [f"H {q}" for q in sorted(c.hadamards)]
    lines += [str(g) for g in c.body]
    return "\n".join(lines) + "\n"


def normalize_text(text: str) -> str:
    """Comments dropped, blank lines removed, runs of whitespace collapsed."""
    out = []
    for _, line in _lines(text):
        if ";" in line:
            line = "; ".join(" ".join(p.split()) for p in line.split(";") if p.strip())
        else:
            line = " ".join(line.split())
        out.append(line)
    return "\n".join(out) + "\n"
