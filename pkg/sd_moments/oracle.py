"""Brute-force expectation oracle for single moment-matrix entries.

The entry at (x, y) of the modulus-d phase ensemble is
2^(-tn) * E_f[w_d^(sum f(x_i) - sum f(y_i))]. Only the m distinct strings of
x and y matter; the oracle lists all d^m assignments of f on them and counts
how often each exponent residue mod d occurs. It never consults the class
predicates.

Results are exact: the residue counts are reduced modulo the cyclotomic
polynomial z^(d/2) + 1, giving rational coordinates in the basis
1, w, ..., w^(d/2 - 1).
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from math import gcd
from typing import Tuple

import numpy as np

from phasedesign.constants import ORACLE_MAX_ASSIGNMENTS
from phasedesign.exceptions import InstanceTooLargeError, PreconditionError
from phasedesign.phase_states import roots_of_unity

from .matrices import check_moment_parameters
from .types import TupleIndex


def enumerate_residue_counts(coefficients, d: int) -> np.ndarray:
    """Residue histogram of sum c_s * v_s mod d over every v in Z_d^m, listed one by one."""
    residues = np.zeros(1, dtype=np.int64)
    values = np.arange(d, dtype=np.int64)
    for c in coefficients:
        residues = np.add.outer(residues, (c * values) % d).ravel() % d
    return np.bincount(residues, minlength=d)


def residue_counts(coefficients, d: int) -> np.ndarray:
    """Same histogram as enumerate_residue_counts, by convolving per-string spreads."""
    dist = np.zeros(d, dtype=np.int64)
    dist[0] = 1
    for c in coefficients:
        step = gcd(c % d, d) if c % d else d
        spread = np.zeros(d, dtype=np.int64)
        # c * v hits each multiple of step exactly step times
        for shift in range(0, d, step):
            spread += np.roll(dist, shift)
        dist = spread * step
    return dist


def _exponent_coefficients(x: TupleIndex, y: TupleIndex) -> Tuple[int, ...]:
    cx, cy = Counter(x.entries), Counter(y.entries)
    return tuple(cx[s] - cy[s] for s in sorted(set(cx) | set(cy)))


def entry_oracle_exact(
    t: int, n: int, x: TupleIndex, y: TupleIndex, d: int, fast: bool = False
) -> Tuple[Fraction, ...]:
    """2^(tn) * entry as rational coordinates over 1, w_d, ..., w_d^(d/2 - 1).

    ``fast`` swaps the assignment listing for the convolution, which has no
    assignment limit.
    """
    check_moment_parameters(t, n)
    if d not in (2, 1 << n):
        raise PreconditionError(f"phase modulus must be 2 or 2^n = {1 << n}, got {d}")
    if x.t != t or y.t != t or x.n != n or y.n != n:
        raise PreconditionError(f"tuples {x}, {y} do not belong to (t={t}, n={n})")
    coefficients = _exponent_coefficients(x, y)
    m = len(coefficients)
    if fast:
        counts = residue_counts(coefficients, d)
    else:
        if d**m > ORACLE_MAX_ASSIGNMENTS:
            raise InstanceTooLargeError(f"{d}^{m} assignments exceed {ORACLE_MAX_ASSIGNMENTS}")
        counts = enumerate_residue_counts(coefficients, d)

    half = d // 2
    total = d**m
    return tuple(Fraction(int(counts[r] - counts[r + half]), total) for r in range(half))


def entry_oracle(t: int, n: int, x: TupleIndex, y: TupleIndex, d: int, fast: bool = False) -> complex:
    coords = entry_oracle_exact(t, n, x, y, d, fast=fast)
    scale = 2.0 ** (-t * n)
    if not any(coords[1:]):
        return complex(float(coords[0]) * scale)
    powers = roots_of_unity(np.arange(len(coords)), d)
    value = sum(float(c) * w for c, w in zip(coords, powers))
    return complex(value * scale)
