"""
src/ep_scanner/algebra/multiplicity.py
Exact multiplicity profiles: square-free factors split into rational roots and s^2 - c pairs
"""

import logging
from fractions import Fraction
from typing import List

from sympy import Poly

from .factorization import square_free_decomposition
from .polynomials import W, deflate_even, degree, inflate_even, is_even, uni_poly
from .root_isolation import rational_roots
from ..core.exceptions import ZeroPolynomialError
from ..core.models.algebraic import ClusterKind, MultiplicityProfile, RootCluster

logger = logging.getLogger(__name__)


def _strip_rational_roots(factor: Poly, multiplicity: int, clusters: List[RootCluster]) -> Poly:
    for root in rational_roots(factor):
        clusters.append(RootCluster(ClusterKind.RATIONAL, multiplicity, value=root))
        factor = factor.exquo(uni_poly((-root, 1), factor.gen))
    return factor


def _split_factor(factor: Poly, multiplicity: int) -> List[RootCluster]:
    clusters: List[RootCluster] = []
    rest = _strip_rational_roots(factor, multiplicity, clusters)

    if degree(rest) >= 2 and is_even(rest):
        # rest(s) = r(s^2); rational roots c of r are not rational squares here
        # (those roots were stripped above), so each gives the pair s^2 - c
        reduced = deflate_even(rest, W)
        for square in rational_roots(reduced):
            clusters.append(RootCluster(ClusterKind.QUADRATIC, multiplicity, square=square))
            reduced = reduced.exquo(uni_poly((-square, 1), W))
        rest = inflate_even(reduced, factor.gen)

    if degree(rest) > 0:
        clusters.append(RootCluster(ClusterKind.UNRESOLVED, multiplicity, factor=rest.monic()))
    return clusters


def multiplicity_profile(p: Poly) -> MultiplicityProfile:
    """
    Square-free decomposition of p plus every exactly describable root group:
    rational roots and conjugate pairs s = ±sqrt(c) with rational c. Higher factors stay unevaluated.
    """
    if p.is_zero:
        raise ZeroPolynomialError("Multiplicity profile of the zero polynomial")
    decomposition = square_free_decomposition(p)
    profile = MultiplicityProfile(polynomial=p, square_free=decomposition)
    for factor, multiplicity in decomposition:
        profile.clusters.extend(_split_factor(factor, multiplicity))
    profile.clusters.sort(key=_cluster_order)
    logger.debug(f"Multiplicity profile of degree {degree(p)}: {profile.summary()}")
    return profile


def _cluster_order(cluster: RootCluster):
    if cluster.kind is ClusterKind.RATIONAL:
        return (0, cluster.value)
    if cluster.kind is ClusterKind.QUADRATIC:
        return (1, cluster.square)
    return (2, Fraction(degree(cluster.factor)))
