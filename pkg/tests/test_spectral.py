"""Tests for spectra, closed-form bounds and the determinant product formula."""

from fractions import Fraction
from math import comb

import numpy as np
import pytest

from phasedesign.exceptions import NonHermitianError, PreconditionError, SingularShiftError
from sd_moments import (
    chain_bound,
    det_from_spectrum,
    eigenvalue_floor,
    hermitian_spectrum,
    jls_closed_form,
    main_bound,
    numeric_rank,
    rank_bound,
    rank_floor_product,
    th1_bound,
    trace_distance,
)
from sd_moments.bounds import jls_closed_form_exact, th1_bound_exact

GRID = [(1, 2), (2, 2), (3, 2), (2, 3), (3, 3), (4, 3), (2, 4), (3, 4), (2, 5), (2, 6)]


class TestSpectrum:
    def test_two_copies_two_qubits(self, analyzer):
        spectrum = analyzer.moment_spectrum("diff", 2, 2)
        assert numeric_rank(spectrum) == 4
        assert spectrum.min == pytest.approx(-1 / 16, abs=1e-14)
        assert spectrum.max == pytest.approx(3 / 16, abs=1e-14)
        assert 0.5 * spectrum.nuclear_norm == pytest.approx(3 / 16, abs=1e-14)

    def test_spectrum_is_cached(self, fresh_analyzer):
        assert fresh_analyzer.moment_spectrum("binary", 2, 2) is fresh_analyzer.moment_spectrum("binary", 2, 2)

    def test_unknown_label(self, analyzer):
        with pytest.raises(PreconditionError):
            analyzer.moment_spectrum("kwise", 2, 2)

    def test_non_hermitian(self):
        with pytest.raises(NonHermitianError):
            hermitian_spectrum(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_numeric_rank_of_zero(self):
        assert numeric_rank(np.zeros((4, 4))) == 0

    def test_trace_distance_of_identical(self, analyzer):
        rho = analyzer.rho_complex(2, 2)
        assert trace_distance(rho, rho) == 0.0

    def test_trace_distance_complex_haar_two_two(self, analyzer):
        assert analyzer.distance("complex", "haar", 2, 2) == pytest.approx(0.15, abs=1e-12)

    def test_binary_complex_distance_is_negative_mass(self, analyzer):
        spectrum = analyzer.moment_spectrum("diff", 3, 2)
        assert 0.5 * spectrum.nuclear_norm == pytest.approx(spectrum.negative_mass, abs=1e-12)
        assert abs(spectrum.total) < 1e-12


class TestBounds:
    """Closed forms and their relation to the observed spectra."""

    def test_known_values(self):
        assert rank_bound(2, 2) == 4
        assert rank_bound(2, 3) == 8
        assert rank_bound(3, 2) == 16
        assert eigenvalue_floor(2, 2) == -0.125
        assert th1_bound(2, 2) == 0.5
        assert jls_closed_form(2, 2) == pytest.approx(0.15, abs=1e-15)
        assert main_bound(2, 2) == 4.0

    @pytest.mark.parametrize("t, n", GRID)
    def test_rank_floor_identity(self, t, n):
        assert rank_floor_product(t, n) == th1_bound_exact(t, n)

    @pytest.mark.parametrize("t", [2, 3, 4])
    def test_decreasing_in_n(self, t):
        th1 = [th1_bound(t, n) for n in range(4, 17)]
        jls = [jls_closed_form(t, n) for n in range(4, 17)]
        assert all(a > b for a, b in zip(th1, th1[1:]))
        assert all(a > b for a, b in zip(jls, jls[1:]))

    @pytest.mark.parametrize("t, n", GRID)
    def test_chain_dominates_sum(self, t, n):
        assert chain_bound(t, n) >= th1_bound(t, n) + jls_closed_form(t, n) - 1e-15
        assert Fraction(chain_bound(t, n)) <= Fraction(4 * t * t, 1 << n) + Fraction(1, 10**12)

    def test_single_copy_bounds_vanish(self):
        assert th1_bound_exact(1, 3) == 0
        assert jls_closed_form_exact(1, 3) == 0
        assert rank_bound(1, 3) == 0

    @pytest.mark.parametrize("t, n", [(0, 2), (4, 2), (2, 0)])
    def test_parameter_range(self, t, n):
        with pytest.raises(PreconditionError):
            rank_bound(t, n)

    @pytest.mark.parametrize("t, n", [(2, 2), (3, 2), (2, 3), (3, 3), (2, 4)])
    def test_observed_rank_and_floor(self, analyzer, t, n):
        spectrum = analyzer.moment_spectrum("diff", t, n)
        assert numeric_rank(spectrum) <= rank_bound(t, n)
        assert spectrum.min >= eigenvalue_floor(t, n) - 1e-10
        assert 0.5 * spectrum.nuclear_norm <= th1_bound(t, n) + 1e-9

    @pytest.mark.parametrize("t, n", [(2, 2), (3, 2), (2, 3), (3, 3)])
    def test_complex_haar_distance_closed_form(self, analyzer, t, n):
        assert analyzer.distance("complex", "haar", t, n) == pytest.approx(jls_closed_form(t, n), abs=1e-9)

    def test_rank_bound_counts_classes(self):
        assert rank_bound(3, 3) == comb(10, 3) - comb(8, 3)


class TestDeterminant:
    """Product formula against the spectrum."""

    @pytest.mark.parametrize("t, n", [(2, 2), (3, 2), (2, 3)])
    def test_matches_spectrum_at_random_shifts(self, analyzer, t, n):
        spectrum = analyzer.moment_spectrum("diff", t, n)
        avoid = np.concatenate([analyzer.singular_set(t, n), spectrum.eigenvalues])
        rng = np.random.default_rng(31 * t + n)
        shifts = []
        while len(shifts) < 10:
            lam = float(rng.uniform(-0.5, 0.5))
            if np.min(np.abs(avoid - lam)) > 1e-6:
                shifts.append(lam)
        for lam in shifts:
            sign, logabs = analyzer.det_product_formula_log(t, n, lam)
            ref_sign, ref_logabs = det_from_spectrum(spectrum, lam)
            assert sign == ref_sign, lam
            # equal logs within 1e-8 mean a relative determinant error below about 1e-8
            assert abs(logabs - ref_logabs) <= 1e-8, lam

    @pytest.mark.parametrize("t, n", [(2, 2), (3, 2), (2, 3)])
    def test_sentinel_terms_positive_below_floor(self, analyzer, t, n):
        floor = eigenvalue_floor(t, n)
        rng = np.random.default_rng(7 * t + n)
        for lam in floor - 1e-6 - rng.uniform(0.0, 2.0, size=10):
            terms = analyzer.sentinel_terms(t, n, float(lam))
            assert terms
            assert all(term > 0 for term in terms), lam

    def test_closed_form_two_two(self, analyzer):
        lam, a = 0.05, 1 / 16
        expected = lam**12 * (-lam - a) ** 3 * (3 * a - lam)
        assert analyzer.det_product_formula(2, 2, lam) == pytest.approx(expected, rel=1e-10)

    def test_sentinel_terms(self, analyzer):
        assert analyzer.sentinel_terms(2, 2, 0.05) == [pytest.approx(3 / 16 - 0.05)]

    def test_singular_set(self, analyzer):
        assert analyzer.singular_set(2, 2) == [-2 / 16, -1 / 16, 0.0]

    @pytest.mark.parametrize("lam", [0.0, -1 / 16, -0.125, 1e-13])
    def test_singular_shift_rejected(self, analyzer, lam):
        with pytest.raises(SingularShiftError):
            analyzer.det_product_formula(2, 2, lam)

    def test_vanishing_factor_gives_zero(self, analyzer):
        # 3/16 is an eigenvalue but not a singular point of the formula
        assert analyzer.det_product_formula(2, 2, 3 / 16) == 0.0
