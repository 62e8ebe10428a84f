"""Dense Hermitian spectra, trace distance and numerical rank."""

from __future__ import annotations

import logging
from typing import Tuple, Union

import numpy as np
import scipy.sparse as sp

from phasedesign.constants import DENSE_MAX_DIM, HERMITIAN_TOL, RANK_TOL
from phasedesign.exceptions import InstanceTooLargeError, NonHermitianError, PreconditionError

from .types import MomentMatrix, Spectrum

logger = logging.getLogger(__name__)

MatrixLike = Union[MomentMatrix, np.ndarray, sp.spmatrix]


def _as_dense(m: MatrixLike) -> Tuple[np.ndarray, str]:
    if isinstance(m, MomentMatrix):
        label, m = m.label, m.matrix
    else:
        label = "matrix"
    if m.shape[0] != m.shape[1]:
        raise PreconditionError(f"matrix is not square: {m.shape}")
    if m.shape[0] > DENSE_MAX_DIM:
        raise InstanceTooLargeError(f"dimension {m.shape[0]} exceeds dense limit {DENSE_MAX_DIM}")
    dense = m.toarray() if sp.issparse(m) else np.asarray(m)
    return dense, label


def hermitian_spectrum(m: MatrixLike) -> Spectrum:
    dense, label = _as_dense(m)
    if dense.size:
        defect = float(np.max(np.abs(dense - dense.conj().T)))
        if defect > HERMITIAN_TOL:
            raise NonHermitianError(f"{label}: max |A - A^H| = {defect:.3e}")
    if np.iscomplexobj(dense) and not np.any(dense.imag):
        dense = dense.real
    eigenvalues = np.linalg.eigvalsh(dense)[::-1].copy()
    eigenvalues.setflags(write=False)
    logger.debug("%s: spectrum of dimension %d computed", label, dense.shape[0])
    return Spectrum(eigenvalues=eigenvalues, dim=dense.shape[0], source=label)


def trace_distance(a: MatrixLike, b: MatrixLike) -> float:
    """Half the nuclear norm of a - b."""
    ma = a.matrix if isinstance(a, MomentMatrix) else a
    mb = b.matrix if isinstance(b, MomentMatrix) else b
    if ma.shape != mb.shape:
        raise PreconditionError(f"dimension mismatch: {ma.shape} vs {mb.shape}")
    return 0.5 * hermitian_spectrum(ma - mb).nuclear_norm


def numeric_rank(m: MatrixLike | Spectrum, tol: float = RANK_TOL) -> int:
    """Eigenvalues with |lambda| > tol * max|lambda|; 0 for the zero matrix."""
    spectrum = m if isinstance(m, Spectrum) else hermitian_spectrum(m)
    magnitudes = np.abs(spectrum.eigenvalues)
    if magnitudes.size == 0:
        return 0
    largest = float(magnitudes.max())
    if largest == 0.0:
        return 0
    return int(np.count_nonzero(magnitudes > tol * largest))


def det_from_spectrum(spectrum: Spectrum, lam: float) -> Tuple[float, float]:
    """sign and log|.| of det(M - lam I) = prod(lambda_i - lam)."""
    shifted = spectrum.eigenvalues - lam
    if np.any(shifted == 0):
        return 0.0, float("-inf")
    sign = float(np.prod(np.sign(shifted)))
    return sign, float(np.sum(np.log(np.abs(shifted))))


class SpectralMixin:
    """Spectra of the moment matrices, cached per analyzer."""

    def moment_spectrum(self, label: str, t: int, n: int) -> Spectrum:
        key = (label, t, n)
        with self._cache_lock:
            cached = self._spectra.get(key)
        if cached is not None:
            return cached
        builders = {
            "complex": self.rho_complex,
            "binary": self.rho_binary,
            "diff": self.rho_diff,
            "haar": self.rho_haar,
        }
        if label not in builders:
            raise PreconditionError(f"unknown moment matrix {label!r}")
        spectrum = hermitian_spectrum(builders[label](t, n))
        self._logging(f"spectrum of rho_{label}(t={t}, n={n}): min {spectrum.min:.6g}, max {spectrum.max:.6g}", 5)
        with self._cache_lock:
            return self._spectra.setdefault(key, spectrum)

    def distance(self, a: str, b: str, t: int, n: int) -> float:
        """Trace distance between two named moment matrices of the same (t, n)."""
        builders = {"complex": self.rho_complex, "binary": self.rho_binary, "haar": self.rho_haar}
        return trace_distance(builders[a](t, n), builders[b](t, n))
