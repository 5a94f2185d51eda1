"""
Tests for square-free decomposition and multiplicity profiles
"""

from fractions import Fraction

import pytest
from sympy import QQ, Poly, Rational

from ep_scanner.algebra.factorization import square_free_decomposition, square_free_part
from ep_scanner.algebra.multiplicity import multiplicity_profile
from ep_scanner.algebra.polynomials import S
from ep_scanner.core.exceptions import ZeroPolynomialError
from ep_scanner.core.models.algebraic import ClusterKind


def _p(expr) -> Poly:
    return Poly(expr, S, domain=QQ)


class TestSquareFree:

    def test_decomposition(self):
        p = _p(5 * S * (S - 1) ** 2 * (S + 2) ** 3)
        assert square_free_decomposition(p) == [(_p(S), 1), (_p(S - 1), 2), (_p(S + 2), 3)]

    def test_multiplicities_times_degrees_sum_to_degree(self):
        p = _p((S ** 2 - 2) ** 3 * (S + 1) * (S - 7) ** 2)
        assert sum(factor.degree() * k for factor, k in square_free_decomposition(p)) == 9

    def test_constant_has_no_factors(self):
        assert square_free_decomposition(_p(3)) == []
        assert square_free_part(_p(3)) == 1

    def test_square_free_part_is_monic(self):
        p = _p((2 * S - 1) ** 3 * (S + 1))
        assert square_free_part(p) == (S - Rational(1, 2)) * (S + 1)

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            square_free_decomposition(_p(0))
        with pytest.raises(ZeroPolynomialError):
            square_free_part(_p(0))


class TestMultiplicityProfile:

    def test_unfolded_degeneracy(self):
        square = Rational(19, 100)
        p = _p(S ** 5 * (S ** 2 - square) ** 2 * (S ** 2 - 2))
        profile = multiplicity_profile(p)

        assert profile.total_multiplicity == 11
        assert profile.multiplicity_of(Fraction(0)) == 5
        assert profile.quadratic(Fraction(19, 100)).multiplicity == 2
        assert profile.quadratic(Fraction(2)).multiplicity == 1
        assert [cluster.kind for cluster in profile.clusters] == [
            ClusterKind.RATIONAL, ClusterKind.QUADRATIC, ClusterKind.QUADRATIC,
        ]

    def test_nine_fold_zero(self):
        profile = multiplicity_profile(_p(S ** 11 - 2 * S ** 9))
        assert profile.multiplicity_of(Fraction(0)) == 9
        assert profile.quadratic(Fraction(2)).multiplicity == 1
        assert len(profile.clusters) == 2

    def test_rational_squares_split_into_roots(self):
        profile = multiplicity_profile(_p((S ** 2 - Rational(9, 4)) ** 2))
        assert profile.multiplicity_of(Fraction(3, 2)) == 2
        assert profile.multiplicity_of(Fraction(-3, 2)) == 2
        assert profile.quadratic(Fraction(9, 4)) is None

    def test_complex_pair(self):
        profile = multiplicity_profile(_p(S ** 2 + 1))
        cluster = profile.quadratic(Fraction(-1))
        assert cluster.describe() == "s = ±i*sqrt(1) (x1)"

    def test_unresolved_factor(self):
        profile = multiplicity_profile(_p((S ** 3 - 2) * (S - 1)))
        kinds = {cluster.kind for cluster in profile.clusters}
        assert kinds == {ClusterKind.RATIONAL, ClusterKind.UNRESOLVED}
        unresolved = profile.clusters[-1]
        assert unresolved.factor == S ** 3 - 2
        assert unresolved.root_count == 3

    def test_summary_and_json(self):
        profile = multiplicity_profile(_p(S ** 11 - 2 * S ** 9))
        assert profile.summary() == "s = 0 (x9), s = ±sqrt(2) (x1)"
        document = profile.to_json()
        assert document["clusters"][0] == {"kind": "rational", "multiplicity": 9, "value": "0"}
        assert document["clusters"][1] == {"kind": "quadratic", "multiplicity": 1, "square": "2"}
        assert {"factor": {"var": "s", "coeffs": ["0", "1"]}, "multiplicity": 9} in document["square_free"]
        assert {"factor": {"var": "s", "coeffs": ["-2", "0", "1"]}, "multiplicity": 1} in document["square_free"]

    def test_zero_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            multiplicity_profile(_p(0))
