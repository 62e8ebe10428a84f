"""Exact t-copy moment matrices of the phase ensembles and of Haar-random states."""

from __future__ import annotations

from itertools import permutations
from math import factorial
from typing import List

import numpy as np
import scipy.sparse as sp

from phasedesign.constants import HAAR_MAX_T, HAAR_MAX_WORK, MATRIX_MAX_NNZ
from phasedesign.exceptions import InstanceTooLargeError, PreconditionError

from .combinatorics import (
    check_enumerable,
    entries_to_index,
    histogram,
    is_permutation_pair,
    multichoose,
    permutation_class_size,
)
from .types import MomentMatrix, TupleIndex


def check_moment_parameters(t: int, n: int) -> None:
    """1 <= t <= 2^n - 1 and t*n within the enumeration limit."""
    check_enumerable(t, n)
    if t >= 1 << n:
        raise PreconditionError(f"t={t} must be strictly smaller than 2^n = {1 << n}")


def _block_matrix(groups: List[np.ndarray], value: float, dim: int) -> sp.csr_matrix:
    nnz = sum(g.size * g.size for g in groups)
    if nnz > MATRIX_MAX_NNZ:
        raise InstanceTooLargeError(f"matrix would store {nnz} entries (limit {MATRIX_MAX_NNZ})")
    rows = np.concatenate([np.repeat(g, g.size) for g in groups])
    cols = np.concatenate([np.tile(g, g.size) for g in groups])
    data = np.full(rows.size, value, dtype=np.complex128)
    matrix = sp.csr_matrix((data, (rows, cols)), shape=(dim, dim))
    matrix.sort_indices()
    return matrix


def haar_entry(t: int, n: int, x: TupleIndex, y: TupleIndex) -> float:
    """Closed form of the Haar moment: 1 / (|P| * C(2^n+t-1, t)) on permutation pairs, else 0."""
    if x.t != t or x.n != n:
        raise PreconditionError(f"tuple {x} does not belong to (t={t}, n={n})")
    if not is_permutation_pair(x, y):
        return 0.0
    return 1.0 / (permutation_class_size(histogram(x)) * multichoose(1 << n, t))


class MomentMatrixMixin:
    """Builders for rho_complex, rho_binary, rho_diff and rho_haar."""

    def rho_complex(self, t: int, n: int) -> MomentMatrix:
        """2^(-tn) on permutation pairs."""
        check_moment_parameters(t, n)
        space = self.tuple_space(t, n)
        matrix = _block_matrix(space.perm_members(), 2.0 ** (-t * n), space.dim)
        self._logging(f"rho_complex(t={t}, n={n}): {matrix.nnz} nonzeros", 5)
        return MomentMatrix("complex", t, n, matrix)

    def rho_binary(self, t: int, n: int) -> MomentMatrix:
        """2^(-tn) on stabilization pairs."""
        check_moment_parameters(t, n)
        space = self.tuple_space(t, n)
        matrix = _block_matrix(space.stab_members(), 2.0 ** (-t * n), space.dim)
        self._logging(f"rho_binary(t={t}, n={n}): {matrix.nnz} nonzeros", 5)
        return MomentMatrix("binary", t, n, matrix)

    def rho_diff(self, t: int, n: int) -> MomentMatrix:
        diff = self.rho_binary(t, n) - self.rho_complex(t, n)
        diff.label = "diff"
        return diff

    def rho_haar(self, t: int, n: int) -> MomentMatrix:
        """Normalized symmetric-subspace projector, summed over S_t operator by operator."""
        check_enumerable(t, n)
        if t > HAAR_MAX_T:
            raise InstanceTooLargeError(f"symmetrizing over S_{t} exceeds t <= {HAAR_MAX_T}")
        dim = 1 << (t * n)
        work = factorial(t) * dim
        if work > HAAR_MAX_WORK:
            raise InstanceTooLargeError(f"symmetrizer needs {work} operator entries (limit {HAAR_MAX_WORK})")

        space = self.tuple_space(t, n)
        rows = np.arange(dim, dtype=np.int64)
        ones = np.ones(dim, dtype=np.float64)
        acc = sp.csr_matrix((dim, dim), dtype=np.float64)
        for pi in permutations(range(t)):
            cols = entries_to_index(space.entries[:, list(pi)], n)
            acc = acc + sp.csr_matrix((ones, (rows, cols)), shape=(dim, dim))
        acc = acc.astype(np.complex128)
        acc.data /= factorial(t) * multichoose(1 << n, t)
        acc.sort_indices()
        self._logging(f"rho_haar(t={t}, n={n}): {acc.nnz} nonzeros", 5)
        return MomentMatrix("haar", t, n, acc.tocsr())
