"""k-wise independent keyed functions from random polynomials over GF(2^n).

A key is the coefficient vector of a degree-(k-1) polynomial; evaluating it on
k distinct points yields k jointly uniform field elements. The 1-bit variant
keeps the least significant bit of the evaluation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional

import numpy as np

from .constants import KWISE_EXHAUSTIVE_MAX_BITS
from .exceptions import InstanceTooLargeError, PreconditionError
from .gf2n import find_modulus, horner_bits
from .types import KWiseKey

logger = logging.getLogger(__name__)

# Upper bound on (number of input sets) * (number of keys) for exhaustive checks.
_EXHAUSTIVE_MAX_WORK = 1 << 28


def _check_x(key: KWiseKey, x: int) -> None:
    if not 0 <= x < (1 << key.n):
        raise PreconditionError(f"input {x} is not an {key.n}-bit string")


def sample_key(n: int, k: int, seed: Optional[int] = None) -> KWiseKey:
    """Draw k independent uniform coefficients with numpy's PCG64 generator."""
    if n < 1 or k < 1:
        raise PreconditionError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    rng = np.random.default_rng(seed)
    raw = rng.integers(0, 1 << n, size=k, dtype=np.uint64, endpoint=False)
    return KWiseKey(coeffs=tuple(int(c) for c in raw), n=n, k=k)


def eval_full(key: KWiseKey, x: int) -> int:
    _check_x(key, x)
    return horner_bits(key.coeffs, x, find_modulus(key.n).poly)


def eval_bit(key: KWiseKey, x: int) -> int:
    return eval_full(key, x) & 1


def eval_table(key: KWiseKey) -> np.ndarray:
    """Evaluations on every input, as an int64 array of length 2^n."""
    poly = find_modulus(key.n).poly
    return np.array([horner_bits(key.coeffs, x, poly) for x in range(1 << key.n)], dtype=np.int64)


def bit_table(key: KWiseKey) -> np.ndarray:
    return eval_table(key) & 1


def _mul_vec(a: np.ndarray, b: int, poly: int, degree: int) -> np.ndarray:
    """Field product of every entry of a with the scalar b."""
    a = a.copy()
    result = np.zeros_like(a)
    top = np.uint64(1 << degree)
    reducer = np.uint64(poly)
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= np.uint64(1)
        overflow = (a & top) != 0
        a[overflow] ^= reducer
    return result


def all_keys_evaluations(n: int, k: int) -> np.ndarray:
    """Evaluations of every key at every input; shape (2^(n*k), 2^n).

    Key index i encodes coefficient c_j in bits [j*n, (j+1)*n).
    """
    if n * k > KWISE_EXHAUSTIVE_MAX_BITS:
        raise InstanceTooLargeError(f"n*k = {n * k} exceeds {KWISE_EXHAUSTIVE_MAX_BITS}")
    poly = find_modulus(n).poly
    mask = np.uint64((1 << n) - 1)
    index = np.arange(1 << (n * k), dtype=np.uint64)
    coeffs = [(index >> np.uint64(j * n)) & mask for j in range(k)]
    table = np.empty((index.size, 1 << n), dtype=np.uint64)
    for x in range(1 << n):
        acc = np.zeros_like(index)
        for c in reversed(coeffs):
            acc = _mul_vec(acc, x, poly, n) ^ c
        table[:, x] = acc
    return table


@dataclass(slots=True)
class KWiseReport:
    n: int
    k: int
    output_bits: int
    passed: bool
    worst_deviation: float
    input_sets_checked: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "output_bits": self.output_bits,
            "passed": self.passed,
            "worst_deviation": self.worst_deviation,
            "input_sets_checked": self.input_sets_checked,
        }


def verify_kwise_exhaustive(n: int, k: int, bit: bool = False) -> KWiseReport:
    """Check exact k-wise independence by enumerating every key.

    With ``bit=True`` the 1-bit truncation is checked instead: each of the
    2^k output patterns must be hit by exactly 2^(n*k - k) keys.
    """
    if n < 1 or k < 1:
        raise PreconditionError(f"need n >= 1 and k >= 1, got n={n}, k={k}")
    if k > (1 << n):
        raise PreconditionError(f"k={k} exceeds the number of inputs 2^{n}")
    work = comb(1 << n, k) << (n * k)
    if n * k > KWISE_EXHAUSTIVE_MAX_BITS or work > _EXHAUSTIVE_MAX_WORK:
        raise InstanceTooLargeError(f"exhaustive check for n={n}, k={k} needs {work} evaluations")

    table = all_keys_evaluations(n, k)
    out_bits = 1 if bit else n
    if bit:
        table = table & np.uint64(1)
    num_keys = table.shape[0]
    num_patterns = 1 << (out_bits * k)
    expected = num_keys // num_patterns
    worst = 0
    checked = 0
    for inputs in combinations(range(1 << n), k):
        code = np.zeros(num_keys, dtype=np.uint64)
        for position, x in enumerate(inputs):
            code |= table[:, x] << np.uint64(out_bits * position)
        counts = np.bincount(code.astype(np.int64), minlength=num_patterns)
        worst = max(worst, int(np.max(np.abs(counts - expected))))
        checked += 1
    deviation = worst / num_keys
    report = KWiseReport(n, k, out_bits, worst == 0, deviation, checked)
    logger.info("k-wise check n=%d k=%d bits=%d: passed=%s deviation=%g", n, k, out_bits, report.passed, deviation)
    return report
