"""Shallow classical circuit evaluating a keyed degree-(k-1) polynomial over GF(2^n).

Inputs are the n bits of x followed by the k coefficient registers
c_0..c_{k-1}; the n outputs are the bits of sum_e c_e * x^e. Powers x^(2^i)
come from repeated squaring, monomials from balanced product trees and the
final sum from XOR trees, so the depth grows like log k * log n.
"""

from __future__ import annotations

import logging
from typing import List, Sequence

from ..constants import KWISE_CIRCUIT_MAX_K, KWISE_CIRCUIT_MAX_N
from ..exceptions import PreconditionError
from ..gf2n import find_modulus, mul_bits, poly_mod
from .classical import CircuitBuilder, ClassicalCircuit, GateKind

logger = logging.getLogger(__name__)

Register = List[int]


def _reduction_rows(n: int, poly: int, length: int) -> List[List[int]]:
    """rows[j] lists the degrees d < length whose x^d mod poly has bit j set."""
    rows: List[List[int]] = [[] for _ in range(n)]
    for d in range(length):
        residue = poly_mod(1 << d, poly)
        for j in range(n):
            if residue >> j & 1:
                rows[j].append(d)
    return rows


def _square_rows(n: int, poly: int) -> List[List[int]]:
    rows: List[List[int]] = [[] for _ in range(n)]
    for i in range(n):
        square = mul_bits(1 << i, 1 << i, poly)
        for j in range(n):
            if square >> j & 1:
                rows[j].append(i)
    return rows


class FieldCircuitBuilder(CircuitBuilder):
    """CircuitBuilder with GF(2^n) register gadgets.

    Every gadget consumes its input registers: their wires may be
    overwritten, so a value needed twice must be fanned out first.
    """

    def __init__(self, num_inputs: int, n: int):
        super().__init__(num_inputs)
        self.n = n
        self.poly = find_modulus(n).poly
        self._square_rows = _square_rows(n, self.poly)
        self._reduce_rows = _reduction_rows(n, self.poly, 2 * n - 1)

    def fan_out_register(self, reg: Sequence[int], count: int) -> List[Register]:
        per_bit = [self.fan_out(w, count) for w in reg]
        return [[bits[c] for bits in per_bit] for c in range(count)]

    def linear_map(self, inputs: Sequence[int], rows: Sequence[Sequence[int]]) -> Register:
        """Output j = XOR of inputs[i] over i in rows[j]."""
        uses = [0] * len(inputs)
        for row in rows:
            for i in row:
                uses[i] += 1
        pools = [self.fan_out(w, u) if u else [] for w, u in zip(inputs, uses)]
        out = []
        for row in rows:
            out.append(self.xor_reduce([pools[i].pop() for i in row]))
        return out

    def square(self, reg: Register) -> Register:
        return self.linear_map(reg, self._square_rows)

    def multiply(self, a: Register, b: Register) -> Register:
        n = self.n
        a_copies = self.fan_out_register(a, n)  # a_copies[j][i] pairs with b_j
        b_copies = self.fan_out_register(b, n)  # b_copies[i][j] pairs with a_i
        partial: List[List[int]] = [[] for _ in range(2 * n - 1)]
        for i in range(n):
            for j in range(n):
                z = self.fresh()[0]
                self.add(GateKind.AND, a_copies[j][i], b_copies[i][j], z)
                partial[i + j].append(z)
        product = [self.xor_reduce(terms) for terms in partial]
        return self.linear_map(product, self._reduce_rows)

    def product_tree(self, factors: List[Register]) -> Register:
        level = list(factors)
        while len(level) > 1:
            nxt = [self.multiply(level[i], level[i + 1]) for i in range(0, len(level) - 1, 2)]
            if len(level) % 2:
                nxt.append(level[-1])
            level = nxt
        return level[0]

    def register_sum(self, regs: List[Register]) -> Register:
        return [self.xor_reduce([r[j] for r in regs]) for j in range(self.n)]


def build_kwise_circuit(n: int, k: int) -> ClassicalCircuit:
    if not 1 <= n <= KWISE_CIRCUIT_MAX_N:
        raise PreconditionError(f"n must be in [1, {KWISE_CIRCUIT_MAX_N}], got {n}")
    if not 1 <= k <= KWISE_CIRCUIT_MAX_K:
        raise PreconditionError(f"k must be in [1, {KWISE_CIRCUIT_MAX_K}], got {k}")

    b = FieldCircuitBuilder(n + n * k, n)
    x: Register = list(range(n))
    coeffs = [list(range(n + j * n, n + (j + 1) * n)) for j in range(k)]
    if k == 1:
        return b.build(coeffs[0])

    exponents = range(1, k)
    levels = (k - 1).bit_length()
    # power_pool[i] holds one dedicated copy of x^(2^i) per monomial using it
    power_pool: List[List[Register]] = []
    current = x
    for i in range(levels):
        users = sum(1 for e in exponents if e >> i & 1)
        needs_square = i + 1 < levels
        copies = b.fan_out_register(current, users + needs_square)
        if needs_square:
            current = b.square(copies.pop())
        power_pool.append(copies)

    terms: List[Register] = [coeffs[0]]
    for e in exponents:
        factors = [power_pool[i].pop() for i in range(levels) if e >> i & 1]
        terms.append(b.multiply(coeffs[e], b.product_tree(factors)))
    circuit = b.build(b.register_sum(terms))
    logger.info("k-wise circuit n=%d k=%d: size %d, depth %d, %d wires", n, k, circuit.size, circuit.depth, circuit.num_wires)
    return circuit
