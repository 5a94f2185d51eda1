"""
src/ep_scanner/algebra/charpoly.py
CHARACTERISTIC POLYNOMIALS: three-term recurrence, Bareiss oracle, secular polynomials

Convention:
    charpoly_tridiag / charpoly_bareiss -> det(M - sI)          (N = 1 gives c - s)
    secular_polynomial / secular_on_path -> det(sI - M), monic  = (-1)^N det(M - sI)
"""

import logging
from fractions import Fraction
from typing import Sequence, Union

from sympy import QQ, Poly
from sympy.polys.matrices import DomainMatrix

from .polynomials import S, T, lift, to_rational, uni_poly
from ..builders.matrix_builders import build_boundary_well_on_path
from ..core.exceptions import ConstraintError
from ..core.models.hamiltonians import CoefficientRing, PathSpec, TriMatrix

logger = logging.getLogger(__name__)


def _linear_factor(entry, ring: CoefficientRing) -> Poly:
    """d - s in the polynomial ring over the entry ring"""
    if ring is CoefficientRing.POLYNOMIAL_T:
        return lift(entry) - Poly(S, S, T, domain=QQ)
    return uni_poly((entry, -1), S)


def _product_term(previous: Poly, product, ring: CoefficientRing) -> Poly:
    if ring is CoefficientRing.POLYNOMIAL_T:
        return previous * lift(product)
    return previous.mul_ground(to_rational(product))


def charpoly_tridiag(matrix: TriMatrix) -> Poly:
    """
    det(M - sI) by the three-term recurrence
        p_0 = 1, p_1 = d_1 - s, p_j = (d_j - s) p_{j-1} - u_{j-1} l_{j-1} p_{j-2}

    Rational entries give a Poly in s, entries in Q[t] give a Poly in (s, t).
    """
    if matrix.ring is CoefficientRing.FLOAT:
        raise ConstraintError("Characteristic polynomials need exact entries, got a float matrix")

    if matrix.ring is CoefficientRing.POLYNOMIAL_T:
        previous = Poly(1, S, T, domain=QQ)
    else:
        previous = Poly(1, S, domain=QQ)
    current = _linear_factor(matrix.diag[0], matrix.ring)

    for j in range(1, matrix.size):
        product = matrix.upper[j - 1] * matrix.lower[j - 1]
        following = _linear_factor(matrix.diag[j], matrix.ring) * current - _product_term(previous, product, matrix.ring)
        previous, current = current, following

    logger.debug(f"Characteristic polynomial of a {matrix.size}x{matrix.size} {matrix.ring.value} matrix")
    return current


def charpoly_bareiss(dense: Sequence[Sequence[Union[Fraction, int, str]]]) -> Poly:
    """
    det(M - sI) by fraction-free elimination over Q[s] (DomainMatrix Bareiss).

    Independent of the tridiagonal structure; used as an oracle for charpoly_tridiag.
    """
    n = len(dense)
    if n == 0 or any(len(row) != n for row in dense):
        raise ConstraintError("Bareiss determinant needs a non-empty square matrix")

    ring = QQ[S]
    rows = [
        [ring.from_sympy(to_rational(value) - (S if i == j else 0)) for j, value in enumerate(row)]
        for i, row in enumerate(dense)
    ]
    determinant = DomainMatrix(rows, (n, n), ring).det()
    return Poly(ring.to_sympy(determinant), S, domain=QQ)


def secular_polynomial(matrix: TriMatrix) -> Poly:
    """Monic det(sI - M) of a fixed exact matrix"""
    determinant = charpoly_tridiag(matrix)
    return determinant if matrix.size % 2 == 0 else -determinant


def secular_on_path(path: PathSpec) -> Poly:
    """
    Exact bivariate secular polynomial det(sI - H(t)) in Q[s, t]
    of the boundary well whose couplings follow the path slots.
    """
    matrix = build_boundary_well_on_path(path)
    secular = secular_polynomial(matrix)
    logger.info(
        f"Secular polynomial on path ({path.describe()}), N={path.size}: "
        f"degree {secular.degree(S)} in s, {secular.degree(T)} in t"
    )
    return secular
