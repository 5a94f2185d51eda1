"""
Tests for discriminants and resultants in s, checked against the resultant formula
"""

from fractions import Fraction

import pytest
import sympy
from sympy import QQ, Poly

from ep_scanner.algebra.discriminant import (
    discriminant_in_s, discriminant_with_factors, resultant_in_s,
)
from ep_scanner.algebra.polynomials import S, T, from_rows, uni_poly
from ep_scanner.core.exceptions import ConstraintError, ZeroPolynomialError


def _random_row(rng, degree_t):
    return uni_poly([Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(degree_t + 1)], T)


def _random_bipoly(rng, degree, degree_t=2, shape="generic"):
    rows = [_random_row(rng, degree_t) for _ in range(degree + 1)]
    while rows[-1].is_zero:
        rows[-1] = _random_row(rng, degree_t)
    zero = uni_poly((), T)
    if shape == "odd":
        rows = [row if i % 2 == 1 else zero for i, row in enumerate(rows)]
    elif shape == "even":
        rows = [row if i % 2 == 0 else zero for i, row in enumerate(rows)]
    return from_rows(rows)


def _by_resultant_formula(p: Poly):
    """(-1)^(n(n-1)/2) Res_s(p, p') / lc_s(p) as an expression in t"""
    expr = p.as_expr()
    n = p.degree(S)
    lead = sympy.Poly(expr, S).LC()
    resultant = sympy.resultant(expr, sympy.diff(expr, S), S)
    return sympy.cancel((-1) ** (n * (n - 1) // 2) * resultant / lead)


def _assert_matches_formula(p: Poly):
    ours = discriminant_in_s(p, normalize=False)
    assert sympy.expand(ours.as_expr() - _by_resultant_formula(p)) == 0


def _bipoly(expr) -> Poly:
    return Poly(expr, S, T, domain=QQ)


class TestDiscriminant:

    def test_quadratic_with_real_exceptional_points(self):
        p = _bipoly(S ** 2 + T ** 2 - 1)
        assert discriminant_in_s(p) == T ** 2 - 1
        assert discriminant_in_s(p, normalize=False) == 4 - 4 * T ** 2

    def test_factors_of_even_quadratic(self):
        _, factors = discriminant_with_factors(_bipoly(S ** 2 + T ** 2 - 1))
        assert factors == [Poly(T ** 2 - 1, T, domain=sympy.ZZ)]

    def test_constant_coefficients_have_no_critical_factors(self):
        disc, factors = discriminant_with_factors(Poly(S ** 2 - 2, S, domain=QQ), normalize=False)
        assert disc == 8
        assert factors == []

    def test_normalized_result_is_primitive_with_positive_leading_coefficient(self):
        disc = discriminant_in_s(_bipoly(S ** 2 - S + Fraction(1, 3) * T))
        assert disc.domain == sympy.ZZ
        assert disc.LC() > 0
        assert disc.content() == 1

    @pytest.mark.parametrize("degree", [2, 3, 4, 5])
    def test_generic_matches_formula(self, rng, degree):
        for _ in range(4):
            _assert_matches_formula(_random_bipoly(rng, degree))

    @pytest.mark.parametrize("degree", [3, 5, 7])
    def test_odd_matches_formula(self, rng, degree):
        for _ in range(3):
            _assert_matches_formula(_random_bipoly(rng, degree, shape="odd"))

    @pytest.mark.parametrize("degree", [2, 4, 6])
    def test_even_matches_formula(self, rng, degree):
        for _ in range(3):
            _assert_matches_formula(_random_bipoly(rng, degree, shape="even"))

    def test_double_root_at_zero_gives_zero_discriminant(self):
        # s^2 (s - t)
        disc, factors = discriminant_with_factors(_bipoly(S ** 3 - T * S ** 2))
        assert disc.is_zero
        assert factors == []

    def test_critical_factors_cover_the_discriminant(self, rng):
        for _ in range(5):
            p = _random_bipoly(rng, 5, shape="odd")
            disc, factors = discriminant_with_factors(p)
            if disc.is_zero:
                continue
            product = Poly(1, T, domain=sympy.ZZ)
            for factor in factors:
                product = product * factor
            assert product.rem(disc.sqf_part()).is_zero

    def test_zero_polynomial_rejected(self):
        with pytest.raises(ZeroPolynomialError):
            discriminant_in_s(_bipoly(0))

    def test_linear_polynomial_rejected(self):
        with pytest.raises(ConstraintError):
            discriminant_in_s(_bipoly(S + T))


class TestResultant:

    def test_matches_sympy_resultant(self, rng):
        for _ in range(5):
            p = _random_bipoly(rng, 3, degree_t=1)
            q = _random_bipoly(rng, 2, degree_t=1)
            ours = resultant_in_s(p, q)
            expected = sympy.resultant(p.as_expr(), q.as_expr(), S)
            assert sympy.expand(ours.as_expr() - expected) == 0

    def test_common_root_gives_zero(self):
        assert resultant_in_s(_bipoly(S - T), _bipoly(S ** 2 - T ** 2)).is_zero
