"""
src/ep_scanner/algebra/discriminant.py
DISCRIMINANT IN s: sympy subresultant discriminants over Q[t]

Odd and even secular polynomials are reduced first (s | p, p = r(s^2)), which keeps
the subresultant sequence small for the unshifted chains. The remaining cases go to
Poly.discriminant, whose result is a polynomial in t once s is eliminated.
"""

import logging
from typing import Dict, List, Tuple

from sympy import QQ, Poly

from .polynomials import S, T, constant, degree, integer_primitive, is_even, s_rows
from ..core.exceptions import ConstraintError, ZeroPolynomialError

logger = logging.getLogger(__name__)


def _as_bivariate(p: Poly) -> Poly:
    if p.gens == (S, T):
        return p
    if p.gens == (S,):
        return Poly(p.as_expr(), S, T, domain=QQ)
    raise ConstraintError(f"Expected a polynomial in s (and t), got generators {p.gens}")


def _reshape_s(p: Poly, step) -> Poly:
    """Rewrite every monomial s^i t^j as s^step(i) t^j"""
    terms: Dict[tuple, object] = {(step(i), j): c for (i, j), c in p.as_dict().items()}
    return Poly.from_dict(terms, S, T, domain=QQ)


def _zero_t() -> Poly:
    return Poly(0, T, domain=QQ)


def resultant_in_s(p: Poly, q: Poly) -> Poly:
    """Exact Res_s(p, q) as a polynomial in t"""
    if p.is_zero or q.is_zero:
        return _zero_t()
    result = _as_bivariate(p).resultant(_as_bivariate(q))
    return result if isinstance(result, Poly) else constant(result, T)


def _discriminant(p: Poly) -> Tuple[Poly, List[Poly]]:
    """
    Exact disc_s of p plus factors in t whose zero sets cover its zero set.

    Structure is used before the general subresultant discriminant:
        p = s q          disc(p) = disc(q) q(0)^2
        p = s^2 q        disc(p) = 0
        p = r(s^2)       disc(p) = (-4)^m lc(r) r(0) disc(r)^2,  m = deg r
    """
    n = degree(p, S)
    if n == 1:
        return constant(1, T), []
    rows = s_rows(p)
    if rows[0].is_zero:
        if rows[1].is_zero:
            return _zero_t(), []
        inner, factors = _discriminant(_reshape_s(p, lambda i: i - 1))
        return inner * rows[1] ** 2, factors + [rows[1]]
    if n % 2 == 0 and is_even(p, S):
        half = _reshape_s(p, lambda i: i // 2)
        half_rows = s_rows(half)
        inner, factors = _discriminant(half)
        value = (inner ** 2 * half_rows[-1] * half_rows[0]).mul_ground((-4) ** (n // 2))
        return value, factors + [half_rows[-1], half_rows[0]]

    disc = p.discriminant()
    if not isinstance(disc, Poly):
        disc = constant(disc, T)
    return disc, [disc]


def _check_degree(p: Poly):
    if p.is_zero:
        raise ZeroPolynomialError("Discriminant of the zero polynomial is undefined")
    if degree(p, S) < 2:
        raise ConstraintError(f"Discriminant needs degree >= 2 in s, got {degree(p, S)}")


def discriminant_with_factors(p: Poly, normalize: bool = True) -> Tuple[Poly, List[Poly]]:
    """
    Discriminant of p in s and its critical factors: distinct primitive integer polynomials
    in t of positive degree whose real roots are exactly the real roots of the discriminant.

    An identically vanishing discriminant is returned as the zero polynomial with no factors.
    """
    p = _as_bivariate(p)
    _check_degree(p)
    exact, factors = _discriminant(p)

    if exact.is_zero:
        logger.warning("Discriminant vanishes identically: multiple roots along the whole path")
        return _zero_t(), []

    disc = integer_primitive(exact) if normalize else exact

    distinct: List[Poly] = []
    for factor in factors:
        if degree(factor) <= 0:
            continue
        factor = integer_primitive(factor)
        if factor not in distinct:
            distinct.append(factor)
    logger.info(f"Discriminant in s: degree {degree(disc)} in t, "
                f"{len(distinct)} critical factors of degrees {[degree(f) for f in distinct]}")
    return disc, distinct


def discriminant_in_s(p: Poly, normalize: bool = True) -> Poly:
    """
    Discriminant of p in s as a polynomial in the path parameter t:
        disc = (-1)^(n(n-1)/2) / lc_s(p) * Res_s(p, dp/ds)

    With normalize=True the result is the primitive integer polynomial with
    positive leading coefficient (same zero set); normalize=False keeps the exact value.

    Raises:
        ZeroPolynomialError: p is zero
        ConstraintError: deg_s(p) < 2
    """
    return discriminant_with_factors(p, normalize)[0]
