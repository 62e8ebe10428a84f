"""End-to-end numerical verification of the rank, eigenvalue and distance bounds."""

from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from phasedesign.constants import (
    DISTANCE_TOL,
    EIG_TOL,
    PSD_TOL,
    RANK_TOL,
    SPECTRAL_MAX_BITS,
    SPECTRUM_SUM_TOL,
    TRACE_TOL,
)
from phasedesign.exceptions import BoundViolation, InstanceTooLargeError

from . import bounds
from .analyzer import MomentAnalyzer
from .loader import default_analyzer
from .spectral import hermitian_spectrum, numeric_rank, trace_distance
from .types import BoundsReport, MomentMatrix

logger = logging.getLogger(__name__)


def _binary_entries(m: MomentMatrix) -> bool:
    scaled = m.scaled_entries()
    return bool(np.all(scaled.real == 1.0) and np.all(scaled.imag == 0.0))


class MomentVerifier:
    """Runs every bound check for one (t, n) and collects the outcome in a BoundsReport.

    The verifier registers its log adapter on ``analyzer``, replacing any
    callback the analyzer held. Without an analyzer it works on a private one,
    so the shared analyzer keeps reporting through the module-level verifier.
    """

    def __init__(self, analyzer: Optional[MomentAnalyzer] = None, logger: Optional[logging.Logger] = None):
        self.analyzer = analyzer if analyzer is not None else MomentAnalyzer()
        self.logger = logger or logging.getLogger(__name__)
        self.analyzer.register_log_callback(self._log_adapter)

    def _log_adapter(self, message: str, level: int):
        """Adapts analyzer verbosity levels to python logging."""
        # 1=Error, 2=Warn, 3=Info, 4=More Info, 5=Debug
        if level <= 1:
            self.logger.error(message)
        elif level == 2:
            self.logger.warning(message)
        elif level == 3:
            self.logger.info(message)
        else:
            self.logger.debug(message)

    def verify_all(self, t: int, n: int, tol_rank: float = RANK_TOL, tol_eig: float = EIG_TOL) -> BoundsReport:
        bounds.check_parameters(t, n)
        if t * n > SPECTRAL_MAX_BITS:
            raise InstanceTooLargeError(f"t*n = {t * n} exceeds the spectral limit {SPECTRAL_MAX_BITS}")

        a = self.analyzer
        report = BoundsReport(t=t, n=n, dim=1 << (t * n))
        rho_c, rho_b, rho_h = a.rho_complex(t, n), a.rho_binary(t, n), a.rho_haar(t, n)
        diff = a.rho_diff(t, n)

        for name, m in (("binary", rho_b), ("complex", rho_c), ("haar", rho_h)):
            report.record(f"trace_{name}", abs(m.trace() - 1.0) <= TRACE_TOL)
            report.record(f"hermitian_{name}", m.hermitian_defect() <= TRACE_TOL)
            report.record(f"psd_{name}", a.moment_spectrum(name, t, n).min >= -PSD_TOL)
        report.diff_trace = float(diff.trace().real)
        report.record("trace_diff", abs(diff.trace()) <= TRACE_TOL)
        report.record("diff_entries_binary", _binary_entries(diff))

        spectrum = hermitian_spectrum(diff)
        report.observed_rank = numeric_rank(spectrum, tol_rank)
        report.rank_bound = bounds.rank_bound(t, n)
        report.lambda_min = spectrum.min if spectrum.dim else 0.0
        report.eigenvalue_floor = bounds.eigenvalue_floor(t, n)
        report.td_binary_complex = 0.5 * spectrum.nuclear_norm
        report.negative_eigen_sum = spectrum.negative_mass
        report.td_complex_haar = trace_distance(rho_c, rho_h)
        report.td_binary_haar = trace_distance(rho_b, rho_h)

        report.th1_bound = bounds.th1_bound(t, n)
        report.jls_closed_form = bounds.jls_closed_form(t, n)
        report.main_bound = bounds.main_bound(t, n)
        report.chain_bound = bounds.chain_bound(t, n)
        report.zero_row_classes, report.extra_zero_row_classes = a.zero_row_classes(t, n)

        report.record("rank_bound", report.observed_rank <= report.rank_bound)
        report.record("eigenvalue_floor", report.lambda_min >= report.eigenvalue_floor - tol_eig)
        report.record("spectrum_sum", abs(spectrum.total) <= SPECTRUM_SUM_TOL)
        report.record(
            "negative_eigen_sum",
            abs(report.td_binary_complex - report.negative_eigen_sum) <= DISTANCE_TOL,
        )
        report.record("rank_floor_identity", bounds.rank_floor_product(t, n) == bounds.th1_bound_exact(t, n))
        report.record("th1", report.td_binary_complex <= report.th1_bound + DISTANCE_TOL)
        report.record("jls", abs(report.td_complex_haar - report.jls_closed_form) <= DISTANCE_TOL)
        report.record(
            "main",
            report.td_binary_haar
            <= min(report.main_bound, report.th1_bound + report.jls_closed_form) + DISTANCE_TOL,
        )
        report.record(
            "triangle",
            report.td_binary_haar <= report.td_binary_complex + report.td_complex_haar + DISTANCE_TOL,
        )

        if report.passed:
            self.logger.info(
                "t=%d n=%d passed: rank %d/%d, lambda_min %.6g, td(b,c)=%.6g td(c,h)=%.6g td(b,h)=%.6g",
                t, n, report.observed_rank, report.rank_bound, report.lambda_min,
                report.td_binary_complex, report.td_complex_haar, report.td_binary_haar,
            )
        else:
            self.logger.error("t=%d n=%d failed checks: %s", t, n, ", ".join(report.failures))
        return report

    def verify_strict(self, t: int, n: int, **tolerances) -> BoundsReport:
        """verify_all, raising BoundViolation on the first recorded failure."""
        report = self.verify_all(t, n, **tolerances)
        if not report.passed:
            raise BoundViolation(f"t={t} n={n}: {', '.join(report.failures)}")
        return report


# Global instance; the only verifier that owns the shared analyzer's log callback
_verifier = MomentVerifier(default_analyzer())


def verify_all(t: int, n: int, tol_rank: float = RANK_TOL, tol_eig: float = EIG_TOL) -> BoundsReport:
    return _verifier.verify_all(t, n, tol_rank=tol_rank, tol_eig=tol_eig)
