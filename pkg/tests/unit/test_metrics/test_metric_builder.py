"""
Tests for exact metrics of the boundary well and the admissible mixing interval
"""

import math
from fractions import Fraction

import pytest

from ep_scanner.builders.matrix_builders import build_boundary_well
from ep_scanner.core.exceptions import ConstraintError, OutsideDomainError
from ep_scanner.core.models.hamiltonians import CouplingVector
from ep_scanner.metrics.metric_builder import (
    admissible_v_interval, crypto_residual, diagonal_metric, f, is_positive_definite,
    metric_min_eigenvalue, pseudometric, tridiagonal_metric,
)


def _random_instance(rng):
    size = rng.randint(2, 50)
    k = rng.randint(0, (size - 1) // 2)
    couplings = CouplingVector(tuple(Fraction(rng.randint(-95, 95), 100) for _ in range(k)))
    return size, couplings


class TestDiagonalMetric:

    def test_f(self):
        assert f("1/2") == Fraction(1, 3)
        assert f(0) == 1
        with pytest.raises(OutsideDomainError):
            f(-1)

    def test_entries_are_palindromic_products(self, full_path_couplings):
        metric = diagonal_metric(full_path_couplings, 11)
        # z_4 = f(-1/2), z_3 = f(1/2) f(-1/2)
        assert metric.z[3] == 3
        assert metric.z[2] == 1
        assert metric.z[0] == 1
        assert metric.z[5] == 1
        assert metric.z == tuple(reversed(metric.z))

    def test_exact_zero_residual(self, full_path_couplings):
        hamiltonian = build_boundary_well(11, full_path_couplings)
        residual = crypto_residual(hamiltonian, diagonal_metric(full_path_couplings, 11).to_trimatrix())
        assert residual.is_exact_zero
        assert residual.describe() == "exact-zero"

    def test_random_instances(self, rng):
        for _ in range(200):
            size, couplings = _random_instance(rng)
            hamiltonian = build_boundary_well(size, couplings)
            assert crypto_residual(hamiltonian, diagonal_metric(couplings, size).to_trimatrix()).is_exact_zero
            for _ in range(3):
                v = Fraction(rng.randint(-20, 20), rng.randint(1, 10))
                theta = tridiagonal_metric(couplings, size, v).to_trimatrix()
                assert crypto_residual(hamiltonian, theta).is_exact_zero

    def test_wrong_metric_leaves_residual(self, full_path_couplings):
        hamiltonian = build_boundary_well(11, full_path_couplings)
        identity = [[Fraction(int(i == j)) for j in range(11)] for i in range(11)]
        residual = crypto_residual(hamiltonian, identity)
        assert not residual.is_exact_zero
        assert residual.to_dense()[0][1] == -residual.to_dense()[1][0]

    @pytest.mark.parametrize("value", [1, -1, Fraction(3, 2)])
    def test_outside_unitarity_domain(self, value):
        with pytest.raises(OutsideDomainError):
            diagonal_metric(CouplingVector((Fraction(value),)), 5)

    def test_overlapping_couplings(self):
        with pytest.raises(ConstraintError):
            pseudometric(CouplingVector((Fraction(0), Fraction(0))), 3)

    @pytest.mark.parametrize("size", [2, 4, 6])
    def test_shared_middle_slot_has_no_metric(self, size):
        couplings = CouplingVector((Fraction(1, 2),) * (size // 2))
        build_boundary_well(size, couplings)
        with pytest.raises(ConstraintError, match="share the middle slot"):
            diagonal_metric(couplings, size)

    def test_metric_degenerates_towards_the_boundary(self):
        """z at the coupled sites shrinks to 0 as lambda -> 1 while the residual stays exactly zero"""
        previous = None
        for value in (Fraction(9, 10), Fraction(99, 100), Fraction(999, 1000)):
            couplings = CouplingVector((value,))
            metric = diagonal_metric(couplings, 5)
            assert metric.z[0] == metric.z[4] == f(value)
            assert crypto_residual(build_boundary_well(5, couplings), metric.to_trimatrix()).is_exact_zero
            if previous is not None:
                assert metric.z[0] < previous / 10
            previous = metric.z[0]
        assert previous == Fraction(1, 1999)
        assert metric_min_eigenvalue(diagonal_metric(CouplingVector((Fraction(999, 1000),)), 5)) == pytest.approx(1 / 1999)
        assert f(1) == 0
        with pytest.raises(OutsideDomainError):
            diagonal_metric(CouplingVector((Fraction(1),)), 5)

    def test_dimension_mismatch(self, full_path_couplings):
        hamiltonian = build_boundary_well(11, full_path_couplings)
        with pytest.raises(ConstraintError):
            crypto_residual(hamiltonian, diagonal_metric(full_path_couplings, 12).to_trimatrix())


class TestPositivity:

    def test_diagonal_metric_is_positive(self, full_path_couplings):
        metric = diagonal_metric(full_path_couplings, 11)
        assert is_positive_definite(metric)
        assert metric_min_eigenvalue(metric) == pytest.approx(1.0)

    def test_free_chain_interval(self):
        couplings = CouplingVector(())
        interval = admissible_v_interval(diagonal_metric(couplings, 11), pseudometric(couplings, 11))
        edge = 1 / (2 * math.cos(math.pi / 12))
        assert interval.v_min == pytest.approx(-edge, abs=1e-6)
        assert interval.v_max == pytest.approx(edge, abs=1e-6)
        assert interval.contains(0.0)
        assert not interval.contains(1.0)

    def test_interval_endpoints_bound_positivity(self, full_path_couplings):
        base = diagonal_metric(full_path_couplings, 11)
        pseudo = pseudometric(full_path_couplings, 11)
        interval = admissible_v_interval(base, pseudo, tol=1e-8)
        inside = Fraction(interval.v_max * 0.99).limit_denominator(10 ** 6)
        outside = Fraction(interval.v_max * 1.01).limit_denominator(10 ** 6)
        assert is_positive_definite(tridiagonal_metric(full_path_couplings, 11, inside))
        assert not is_positive_definite(tridiagonal_metric(full_path_couplings, 11, outside))
        assert interval.to_json()["open"] is True

    def test_invalid_tolerance(self, full_path_couplings):
        base = diagonal_metric(full_path_couplings, 11)
        with pytest.raises(ConstraintError):
            admissible_v_interval(base, pseudometric(full_path_couplings, 11), tol=0)
