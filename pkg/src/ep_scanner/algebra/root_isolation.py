"""
src/ep_scanner/algebra/root_isolation.py
REAL ROOTS: certified counting and isolation on sympy Polys, rational root certification

Counts use Sturm sequences (Poly.count_roots) on square-free factors, isolating intervals
come from Poly.intervals and rational roots from the linear factors over Q (ground_roots),
so every answer is exact (no floating point).
"""

import logging
from fractions import Fraction
from typing import List, Optional, Union

from sympy import Poly

from .factorization import square_free_decomposition
from .polynomials import degree, evaluate, to_fraction, to_rational
from ..core.exceptions import ConstraintError, ZeroPolynomialError
from ..core.models.algebraic import RootInterval

logger = logging.getLogger(__name__)

Point = Optional[Fraction]   # None stands for -inf (lower end) or +inf (upper end)


def _count_distinct(poly: Poly, lo: Point, hi: Point) -> int:
    """Distinct real roots of a square-free poly in (lo, hi]"""
    inf = None if lo is None else to_rational(lo)
    sup = None if hi is None else to_rational(hi)
    count = int(poly.count_roots(inf, sup))
    # count_roots counts the closed interval [lo, hi]
    if inf is not None and poly.eval(inf) == 0:
        count -= 1
    return count


def count_real_roots(poly: Poly, lo: Point = None, hi: Point = None, multiplicity: bool = True) -> int:
    """
    Number of real roots in (lo, hi] (None = unbounded), counted with multiplicity
    by default, via Sturm sequences of the square-free factors.
    """
    if poly.is_zero:
        raise ZeroPolynomialError("The zero polynomial has infinitely many roots")
    if degree(poly) <= 0:
        return 0
    if not multiplicity:
        return _count_distinct(poly.sqf_part(), lo, hi)
    return sum(power * _count_distinct(factor, lo, hi) for factor, power in square_free_decomposition(poly))


def rational_roots(poly: Poly) -> List[Fraction]:
    """All distinct rational roots, ascending"""
    if poly.is_zero:
        raise ZeroPolynomialError("The zero polynomial has infinitely many roots")
    if degree(poly) <= 0:
        return []
    return sorted(to_fraction(root) for root in poly.ground_roots())


def isolate_real_roots(poly: Poly, width: Union[float, Fraction] = 1e-12,
                       certify: bool = True, square_free: bool = False) -> List[RootInterval]:
    """
    Isolating intervals (lo, hi] of width < width for every distinct real root, ascending.

    Rational roots are certified exactly when certify=True (RootInterval.exact).
    square_free=True skips the square-free reduction for inputs known to be square-free.
    """
    if poly.is_zero:
        raise ZeroPolynomialError("Cannot isolate the roots of the zero polynomial")
    target = Fraction(width)
    if target <= 0:
        raise ConstraintError(f"Isolation width must be positive, got {width}")
    if degree(poly) <= 0:
        return []

    reduced = poly if square_free else poly.sqf_part()
    exact_roots = rational_roots(reduced) if certify else []

    found: List[RootInterval] = []
    for (a, b), _ in reduced.intervals(eps=to_rational(target)):
        lo, hi = to_fraction(a), to_fraction(b)
        if lo == hi:
            found.append(RootInterval(lo, hi, lo))
            continue
        exact = next((root for root in exact_roots if lo <= root <= hi), None)
        if exact is None and evaluate(reduced, hi) == 0:
            exact = hi
        if exact is None and evaluate(reduced, lo) == 0:
            exact = lo
        found.append(RootInterval(exact, exact, exact) if exact is not None else RootInterval(lo, hi))

    found.sort(key=lambda interval: interval.midpoint)
    logger.debug(f"Isolated {len(found)} real roots of a degree-{degree(poly)} polynomial")
    return found
