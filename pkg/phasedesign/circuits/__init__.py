from .classical import CircuitBuilder, ClassicalCircuit, Gate, GateKind, circuit_metrics, layer_depth
from .compiler import compile_to_toffoli, reverse_circuit, specialize_inputs
from .ht import HTCircuit, build_gbin_circuit, simulate_ht
from .kwise_circuit import build_kwise_circuit
from .text_format import dump_classical, dump_ht, normalize_text, parse_classical, parse_ht
from .truth_table import anf_coefficients, circuit_from_truth_table

__all__ = [
    "CircuitBuilder",
    "ClassicalCircuit",
    "Gate",
    "GateKind",
    "HTCircuit",
    "anf_coefficients",
    "build_gbin_circuit",
    "build_kwise_circuit",
    "circuit_from_truth_table",
    "circuit_metrics",
    "compile_to_toffoli",
    "dump_classical",
    "dump_ht",
    "layer_depth",
    "normalize_text",
    "parse_classical",
    "parse_ht",
    "reverse_circuit",
    "simulate_ht",
    "specialize_inputs",
]
