"""
Tests for characteristic and secular polynomials
"""

from fractions import Fraction

import pytest
from sympy import QQ, Poly, Rational

from ep_scanner.algebra.charpoly import (
    charpoly_bareiss, charpoly_tridiag, secular_on_path, secular_polynomial,
)
from ep_scanner.algebra.polynomials import S, T, degree, evaluate_t, to_rational
from ep_scanner.builders.matrix_builders import build_boundary_well
from ep_scanner.builders.path_parser import parse_path
from ep_scanner.core.exceptions import ConstraintError
from ep_scanner.core.models.hamiltonians import CoefficientRing, CouplingVector, TriMatrix


def _t(*coeffs):
    """Expression in t from its coefficients on t^0, t^2, t^4, ..."""
    return sum(c * T ** (2 * i) for i, c in enumerate(coeffs))


def _reflect(p: Poly) -> Poly:
    """p(-s)"""
    return p.compose(Poly(-S, S, domain=QQ))


def _random_fraction(rng, bound=5, denominator=7):
    return Fraction(rng.randint(-bound * denominator, bound * denominator), rng.randint(1, denominator))


def _random_couplings(rng, size):
    k = rng.randint(0, (size - 1) // 2)
    return CouplingVector(tuple(Fraction(rng.randint(-95, 95), 100) for _ in range(k)))


@pytest.fixture
def full_path_secular():
    return secular_on_path(parse_path("t,-t,t,-t", 11))


class TestSecularOnPath:

    def test_full_path_coefficients(self, full_path_secular):
        expected = (
            S ** 11
            + _t(-10, 8) * S ** 9
            + _t(36, -58, 22) * S ** 7
            + _t(-56, 136, -104, 24) * S ** 5
            + _t(35, -114, 132, -62, 9) * S ** 3
            + _t(-6, 24, -36, 24, -6) * S
        )
        assert full_path_secular.gens == (S, T)
        assert full_path_secular == Poly(expected, S, T, domain=QQ)

    @pytest.mark.parametrize("t", [1, -1])
    def test_collapse_at_exceptional_points(self, full_path_secular, t):
        assert evaluate_t(full_path_secular, t) == S ** 11 - 2 * S ** 9

    def test_uncoupled_chain_is_chebyshev(self, full_path_secular):
        expected = S ** 11 - 10 * S ** 9 + 36 * S ** 7 - 56 * S ** 5 + 35 * S ** 3 - 6 * S
        assert evaluate_t(full_path_secular, 0) == expected

    def test_unfolded_path_at_exceptional_point(self):
        secular = secular_on_path(parse_path("9/10,-t,t,-t", 11))
        expected = (S ** 11 - Rational(119, 50) * S ** 9 + Rational(7961, 10000) * S ** 7
                    - Rational(361, 5000) * S ** 5)
        assert evaluate_t(secular, 1) == expected
        assert evaluate_t(secular, -1) == expected

    def test_specialization_matches_rational_matrix(self, full_path_secular):
        t = Fraction(2, 3)
        matrix = build_boundary_well(11, CouplingVector((t, -t, t, -t)))
        assert evaluate_t(full_path_secular, t) == secular_polynomial(matrix)

    def test_shift_moves_the_spectral_variable(self):
        unshifted = secular_on_path(parse_path("t", 5))
        shifted = secular_on_path(parse_path("t", 5, shift=2))
        t = Fraction(1, 4)
        # det(sI - M - 2I) = p(s - 2)
        expected = evaluate_t(unshifted, t).compose(Poly(S - 2, S, domain=QQ))
        assert evaluate_t(shifted, t) == expected


class TestCharpolyTridiag:

    def test_single_entry(self):
        matrix = TriMatrix((Fraction(3, 2),), (), ())
        assert charpoly_tridiag(matrix) == Rational(3, 2) - S
        assert secular_polynomial(matrix) == S - Rational(3, 2)

    def test_float_matrix_rejected(self):
        matrix = TriMatrix((0.0, 0.0), (1.0,), (1.0,), CoefficientRing.FLOAT)
        with pytest.raises(ConstraintError):
            charpoly_tridiag(matrix)

    def test_secular_polynomial_is_monic(self, rng):
        for size in range(2, 9):
            matrix = build_boundary_well(size, _random_couplings(rng, size))
            secular = secular_polynomial(matrix)
            assert degree(secular) == size
            assert secular.LC() == 1

    def test_matches_bareiss_oracle(self, rng):
        for _ in range(100):
            size = rng.randint(1, 8)
            matrix = TriMatrix(
                tuple(_random_fraction(rng) for _ in range(size)),
                tuple(_random_fraction(rng) for _ in range(size - 1)),
                tuple(_random_fraction(rng) for _ in range(size - 1)),
            )
            assert charpoly_tridiag(matrix) == charpoly_bareiss(matrix.to_dense())

    def test_parity_and_coupling_sign_invariance(self, rng):
        for _ in range(50):
            size = rng.randint(2, 14)
            couplings = _random_couplings(rng, size)
            secular = secular_polynomial(build_boundary_well(size, couplings))
            assert secular_polynomial(build_boundary_well(size, couplings.negated())) == secular
            sign = -1 if size % 2 else 1
            assert _reflect(secular) == secular * sign

    def test_blocks_sharing_the_middle_slot(self):
        # N = 2, k = 1: det(sI - M) = s^2 - (1 - lambda^2)
        for value in (Fraction(1, 2), Fraction(-3, 10), Fraction(0)):
            matrix = build_boundary_well(2, CouplingVector((value,)))
            assert secular_polynomial(matrix) == S ** 2 - (1 - to_rational(value) ** 2)


class TestCharpolyBareiss:

    def test_needs_square_input(self):
        with pytest.raises(ConstraintError):
            charpoly_bareiss([])
        with pytest.raises(ConstraintError):
            charpoly_bareiss([[1, 2], [3]])

    def test_zero_diagonal(self):
        dense = [[0, 1, 0], [1, 0, 1], [0, 1, 0]]
        assert charpoly_bareiss(dense) == -(S ** 3) + 2 * S

    def test_string_entries(self):
        assert charpoly_bareiss([["1/2"]]) == Rational(1, 2) - S

    def test_pivoting_on_zero_leading_entry(self):
        # det([[0, 1], [1, 0]] - sI) = s^2 - 1
        assert charpoly_bareiss([[0, 1], [1, 0]]) == S ** 2 - 1
