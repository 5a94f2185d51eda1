"""
src/ep_scanner/algebra/factorization.py
Square-free decomposition over Q on top of sympy's sqf_list
"""

from typing import List, Tuple

from sympy import Poly

from .polynomials import degree
from ..core.exceptions import ZeroPolynomialError


def square_free_decomposition(p: Poly) -> List[Tuple[Poly, int]]:
    """
    Monic square-free factors with multiplicities: p = lc(p) * prod q_i^i.

    Only factors of positive degree are returned; multiplicities times degrees sum to deg p.
    """
    if p.is_zero:
        raise ZeroPolynomialError("Square-free decomposition of the zero polynomial")
    if degree(p) <= 0:
        return []
    _, factors = p.sqf_list()
    return [(factor.monic(), multiplicity) for factor, multiplicity in factors if degree(factor) > 0]


def square_free_part(p: Poly) -> Poly:
    """Monic product of the distinct irreducible factors: p / gcd(p, p')"""
    if p.is_zero:
        raise ZeroPolynomialError("Square-free part of the zero polynomial")
    if degree(p) <= 0:
        return Poly(1, *p.gens, domain=p.domain.get_field())
    return p.sqf_part().monic()
