"""Tests for the moment matrices and their brute-force entry oracle."""

from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from phasedesign.exceptions import InstanceTooLargeError, PreconditionError
from sd_moments import (
    TupleIndex,
    entry_oracle,
    entry_oracle_exact,
    haar_entry,
    hermitian_spectrum,
    histogram,
    is_permutation_pair,
    is_stabilization_pair,
    permutation_class_size,
)
from sd_moments.oracle import enumerate_residue_counts, residue_counts


def _all_tuples(t, n):
    return [TupleIndex.from_int(v, t, n) for v in range(1 << (t * n))]


def _scaled_coordinates(value, d):
    """Oracle-style coordinates of a 2^(tn)-scaled entry that must be real."""
    assert value.imag == 0
    return (Fraction(value.real),) + (Fraction(0),) * (d // 2 - 1)


class TestEntryFormulas:
    """rho_complex and rho_binary against the pair predicates."""

    @pytest.mark.parametrize("t, n", [(1, 2), (2, 2), (3, 2), (2, 3)])
    def test_complex_support_is_permutation_pairs(self, analyzer, t, n):
        dense = analyzer.rho_complex(t, n).to_dense()
        scale = 2.0 ** (-t * n)
        tuples = _all_tuples(t, n)
        for x in tuples:
            for y in tuples:
                expected = scale if is_permutation_pair(x, y) else 0.0
                assert dense[x.to_int(), y.to_int()] == expected

    @pytest.mark.parametrize("t, n", [(1, 2), (2, 2), (3, 2), (2, 3)])
    def test_binary_support_is_stabilization_pairs(self, analyzer, t, n):
        dense = analyzer.rho_binary(t, n).to_dense()
        scale = 2.0 ** (-t * n)
        tuples = _all_tuples(t, n)
        for x in tuples:
            for y in tuples:
                expected = scale if is_stabilization_pair(x, y) else 0.0
                assert dense[x.to_int(), y.to_int()] == expected

    @pytest.mark.parametrize("label", ["rho_complex", "rho_binary", "rho_haar"])
    @pytest.mark.parametrize("t, n", [(1, 1), (2, 2), (3, 2), (2, 3), (3, 3)])
    def test_unit_trace_and_hermitian(self, analyzer, label, t, n):
        m = getattr(analyzer, label)(t, n)
        assert abs(m.trace() - 1.0) < 1e-12
        assert m.hermitian_defect() == 0.0

    def test_diff_is_traceless_with_binary_entries(self, analyzer):
        diff = analyzer.rho_diff(3, 2)
        assert diff.label == "diff"
        assert abs(diff.trace()) < 1e-15
        np.testing.assert_array_equal(diff.scaled_entries(), np.ones(diff.nnz))

    def test_diff_support_is_remote_pairs(self, analyzer, tuple_index):
        diff = analyzer.rho_diff(2, 2)
        assert diff.entry(tuple_index("00", "00"), tuple_index("01", "01")) == 1 / 16
        assert diff.entry(tuple_index("00", "01"), tuple_index("01", "00")) == 0
        assert diff.row_support(tuple_index("01", "10")).size == 0

    def test_t_must_be_below_field_size(self, analyzer):
        with pytest.raises(PreconditionError):
            analyzer.rho_binary(4, 2)

    def test_enumeration_limit(self, analyzer):
        with pytest.raises(InstanceTooLargeError):
            analyzer.rho_complex(9, 2)


class TestMomentProperties:
    @pytest.mark.parametrize("label", ["rho_binary", "rho_complex", "rho_haar"])
    @pytest.mark.parametrize("t, n", [(1, 2), (2, 2), (3, 2), (2, 3)])
    def test_positive_semidefinite(self, analyzer, label, t, n):
        m = getattr(analyzer, label)(t, n)
        assert hermitian_spectrum(m).min >= -1e-10

    @pytest.mark.parametrize("t, n", [(1, 2), (2, 2), (3, 2), (2, 3)])
    def test_complex_row_support_is_permutation_class(self, analyzer, t, n):
        m = analyzer.rho_complex(t, n)
        for x in _all_tuples(t, n):
            assert m.row_support(x).size == permutation_class_size(histogram(x))


class TestHaar:
    @pytest.mark.parametrize("t, n", [(1, 2), (2, 2), (3, 2), (2, 3)])
    def test_closed_form(self, analyzer, t, n):
        dense = analyzer.rho_haar(t, n).to_dense()
        tuples = _all_tuples(t, n)
        for x in tuples[::3]:
            for y in tuples:
                assert abs(dense[x.to_int(), y.to_int()] - haar_entry(t, n, x, y)) < 1e-15

    def test_is_projector_over_its_trace(self, analyzer):
        dense = analyzer.rho_haar(2, 2).to_dense()
        # rank C(5, 2) = 10, every nonzero eigenvalue 1/10
        np.testing.assert_allclose(dense @ dense, dense / 10, atol=1e-14)

    def test_single_copy_is_maximally_mixed(self, analyzer):
        np.testing.assert_allclose(analyzer.rho_haar(1, 3).to_dense(), np.eye(8) / 8, atol=1e-15)


class TestOracle:
    """The brute-force oracle must agree with the class-based matrices."""

    def test_residue_counts(self):
        # 2 * v mod 4 over v in Z_4 hits 0 and 2 twice each
        assert enumerate_residue_counts([2], 4).tolist() == [2, 0, 2, 0]
        assert enumerate_residue_counts([1, -1], 4).tolist() == [4, 4, 4, 4]
        assert enumerate_residue_counts([0, 0], 2).tolist() == [4, 0]

    @pytest.mark.parametrize("d", [2, 4, 8])
    def test_convolution_matches_enumeration(self, d):
        for coefficients in product(range(-3, 4), repeat=3):
            np.testing.assert_array_equal(
                residue_counts(coefficients, d), enumerate_residue_counts(coefficients, d)
            )

    def test_fast_path_agrees(self, tuple_index):
        x, y = tuple_index("000", "001", "010"), tuple_index("001", "000", "011")
        for d in (2, 8):
            assert entry_oracle_exact(3, 3, x, y, d, fast=True) == entry_oracle_exact(3, 3, x, y, d)

    def test_worked_entry(self, tuple_index):
        x, y = tuple_index("00", "00"), tuple_index("01", "01")
        assert entry_oracle_exact(2, 2, x, y, 2) == (Fraction(1),)
        assert entry_oracle(2, 2, x, y, 2) == 1 / 16
        assert entry_oracle(2, 2, x, y, 4) == 0

    @pytest.mark.timeout(120)
    @pytest.mark.parametrize("t, n", [(1, 2), (2, 2), (3, 2), (1, 3), (2, 3)])
    def test_every_entry_matches_exactly(self, analyzer, t, n):
        scale = float(1 << (t * n))
        binary = analyzer.rho_binary(t, n).to_dense() * scale
        complex_ = analyzer.rho_complex(t, n).to_dense() * scale
        d = 1 << n
        tuples = _all_tuples(t, n)
        for x in tuples:
            for y in tuples:
                i, j = x.to_int(), y.to_int()
                assert entry_oracle_exact(t, n, x, y, 2) == _scaled_coordinates(binary[i, j], 2)
                assert entry_oracle_exact(t, n, x, y, d) == _scaled_coordinates(complex_[i, j], d)

    @pytest.mark.timeout(120)
    @pytest.mark.parametrize("t, n", [(3, 3), (2, 4)])
    def test_random_entries_match_exactly(self, analyzer, t, n):
        scale = float(1 << (t * n))
        binary = analyzer.rho_binary(t, n).to_dense() * scale
        complex_ = analyzer.rho_complex(t, n).to_dense() * scale
        d = 1 << n
        rng = np.random.default_rng(20240601)
        for trial in range(10_000):
            x = TupleIndex(tuple(int(e) for e in rng.integers(0, d, size=t)), n)
            # every other pair is a reordering of x, so the supports are hit too
            if trial % 2:
                y = TupleIndex(tuple(int(e) for e in rng.permutation(x.entries)), n)
            else:
                y = TupleIndex(tuple(int(e) for e in rng.integers(0, d, size=t)), n)
            i, j = x.to_int(), y.to_int()
            assert entry_oracle_exact(t, n, x, y, 2) == _scaled_coordinates(binary[i, j], 2)
            assert entry_oracle_exact(t, n, x, y, d) == _scaled_coordinates(complex_[i, j], d)

    def test_exact_coordinates_vanish_off_support(self, tuple_index):
        coords = entry_oracle_exact(3, 2, tuple_index("00", "01", "10"), tuple_index("00", "00", "11"), 4)
        assert coords == (Fraction(0), Fraction(0))

    def test_rejects_modulus(self, tuple_index):
        with pytest.raises(PreconditionError):
            entry_oracle(2, 2, tuple_index("00", "01"), tuple_index("00", "01"), 3)

    def test_assignment_limit(self, tuple_index, mocker):
        mocker.patch("sd_moments.oracle.ORACLE_MAX_ASSIGNMENTS", 15)
        x, y = tuple_index("00", "01"), tuple_index("10", "11")
        with pytest.raises(InstanceTooLargeError):
            entry_oracle_exact(2, 2, x, y, 2)
        assert entry_oracle_exact(2, 2, x, y, 2, fast=True) == (Fraction(0),)

    def test_all_values_real_for_small_instances(self):
        t, n = 2, 2
        for x, y in product(_all_tuples(t, n)[:4], repeat=2):
            assert entry_oracle(t, n, x, y, 4).imag == 0
