"""
src/ep_scanner/metrics/metric_builder.py
HILBERT-SPACE METRICS for the boundary-well family

- diagonal metric z_j = f(lambda_j) f(lambda_{j+1}) ... f(lambda_k), mirrored, 1 in the middle
- pseudometric off_j = (1 + lambda_j) z_j, mirrored, 1 in the middle
- tridiagonal metric Theta = diag(z) + v * P, positive definite on an open v-interval
- exact hidden-Hermiticity residual H^T Theta - Theta H
"""

import logging
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

import numpy as np
from scipy.linalg import eigh_tridiagonal

from ..builders.rational_parser import parse_rational
from ..core.constants import ADMISSIBLE_V_SEARCH, TOLERANCES
from ..core.exceptions import ConstraintError, OutsideDomainError
from ..core.models.hamiltonians import CoefficientRing, CouplingVector, TriMatrix
from ..core.models.metrics import (
    AdmissibleInterval, CryptoResidual, DiagonalMetric, Pseudometric, TridiagMetric,
)

logger = logging.getLogger(__name__)

Sparse = Dict[Tuple[int, int], Fraction]
DenseOrTri = Union[TriMatrix, Sequence[Sequence[Fraction]]]


def f(x: Union[Fraction, int, str]) -> Fraction:
    """(1 - x)/(1 + x); pole at x = -1"""
    x = parse_rational(x)
    if x == -1:
        raise OutsideDomainError("f(x) = (1-x)/(1+x) has a pole at x = -1 (exceptional-point boundary)")
    return (1 - x) / (1 + x)


def _cumulative_products(couplings: CouplingVector) -> List[Fraction]:
    """z_j for j = 1..k, built from the innermost coupling outwards"""
    products = [Fraction(1)] * couplings.k
    running = Fraction(1)
    for j in range(couplings.k - 1, -1, -1):
        running *= f(couplings.lambdas[j])
        products[j] = running
    return products


def _check_metric_domain(couplings: CouplingVector, size: int) -> None:
    couplings.check_separated(size)
    couplings.check_unitarity()


def diagonal_metric(couplings: CouplingVector, size: int) -> DiagonalMetric:
    """
    Diagonal metric of the boundary well.

    Raises:
        ConstraintError: 2k > N - 1
        OutsideDomainError: some |lambda_j| >= 1
    """
    _check_metric_domain(couplings, size)
    z = [Fraction(1)] * size
    for j, value in enumerate(_cumulative_products(couplings)):
        z[j] = value
        z[size - 1 - j] = value
    return DiagonalMetric(tuple(z))


def pseudometric(couplings: CouplingVector, size: int) -> Pseudometric:
    """Bidiagonal pseudometric (symmetric, zero diagonal) intertwining the boundary well"""
    _check_metric_domain(couplings, size)
    off = [Fraction(1)] * (size - 1)
    for j, value in enumerate(_cumulative_products(couplings)):
        entry = (1 + couplings.lambdas[j]) * value
        off[j] = entry
        off[size - 2 - j] = entry
    return Pseudometric(tuple(off))


def tridiagonal_metric(couplings: CouplingVector, size: int, v: Union[Fraction, int, str] = 0) -> TridiagMetric:
    """diag(z) + v * P with exact rational v"""
    return TridiagMetric(diagonal_metric(couplings, size), pseudometric(couplings, size), parse_rational(v))


def _to_sparse(matrix: DenseOrTri) -> Tuple[int, Sparse]:
    if isinstance(matrix, TriMatrix):
        if matrix.ring is not CoefficientRing.RATIONAL:
            raise ConstraintError("Exact residuals need a rational matrix")
        entries: Sparse = {}
        for j, value in enumerate(matrix.diag):
            if value:
                entries[(j, j)] = value
        for j in range(matrix.size - 1):
            if matrix.upper[j]:
                entries[(j, j + 1)] = matrix.upper[j]
            if matrix.lower[j]:
                entries[(j + 1, j)] = matrix.lower[j]
        return matrix.size, entries
    size = len(matrix)
    return size, {
        (i, j): Fraction(value)
        for i, row in enumerate(matrix)
        for j, value in enumerate(row)
        if value
    }


def _sparse_product(left: Sparse, right: Sparse) -> Sparse:
    by_row: Dict[int, List[Tuple[int, Fraction]]] = {}
    for (k, j), value in right.items():
        by_row.setdefault(k, []).append((j, value))
    product: Sparse = {}
    for (i, k), a in left.items():
        for j, b in by_row.get(k, ()):
            product[(i, j)] = product.get((i, j), Fraction(0)) + a * b
    return product


def crypto_residual(hamiltonian: DenseOrTri, theta: DenseOrTri) -> CryptoResidual:
    """
    Exact H^T Theta - Theta H. The zero matrix certifies that H is self-adjoint in the metric Theta.

    Both arguments may be TriMatrix values or dense rational lists; the product is
    accumulated over nonzero entries only.
    """
    size_h, h = _to_sparse(hamiltonian)
    size_t, t = _to_sparse(theta)
    if size_h != size_t:
        raise ConstraintError(f"Dimension mismatch: H is {size_h}x{size_h}, Theta is {size_t}x{size_t}")
    h_transposed = {(j, i): value for (i, j), value in h.items()}
    left = _sparse_product(h_transposed, t)
    right = _sparse_product(t, h)
    residual: Sparse = {}
    for key in set(left) | set(right):
        value = left.get(key, Fraction(0)) - right.get(key, Fraction(0))
        if value:
            residual[key] = value
    if residual:
        logger.debug(f"Crypto residual has {len(residual)} nonzero entries")
    return CryptoResidual(size=size_h, entries=residual)


def metric_min_eigenvalue(theta: Union[TriMatrix, TridiagMetric, DiagonalMetric]) -> float:
    """Smallest eigenvalue of a symmetric tridiagonal metric (float)"""
    if not isinstance(theta, TriMatrix):
        theta = theta.to_trimatrix()
    diag = np.asarray([float(value) for value in theta.diag])
    off = np.asarray([float(value) for value in theta.upper])
    if theta.size == 1:
        return float(diag[0])
    values = eigh_tridiagonal(diag, off, eigvals_only=True, select="i", select_range=(0, 0))
    return float(values[0])


def is_positive_definite(theta: Union[TriMatrix, TridiagMetric, DiagonalMetric]) -> bool:
    return metric_min_eigenvalue(theta) > 0


def admissible_v_interval(base: DiagonalMetric, pseudo: Pseudometric,
                          tol: float = TOLERANCES["admissible_v"]) -> AdmissibleInterval:
    """
    Maximal open interval around v = 0 on which diag(z) + v P stays positive definite.

    The smallest eigenvalue is concave in v (a minimum of affine functions), so the
    positive set is an interval; each side is found by doubling and then bisection
    to a bracket of width <= tol.

    Raises:
        OutsideDomainError: base metric not positive
        ConstraintError: tol <= 0 or size mismatch
    """
    if tol <= 0:
        raise ConstraintError(f"Bracket width must be positive, got {tol}")
    if base.size != pseudo.size:
        raise ConstraintError(f"Base metric has size {base.size}, pseudometric {pseudo.size}")
    if any(value <= 0 for value in base.z):
        raise OutsideDomainError("Base metric is not positive; no admissible mixing weight exists")

    diag = np.asarray([float(value) for value in base.z])
    off = np.asarray([float(value) for value in pseudo.off])

    def smallest(v: float) -> float:
        values = eigh_tridiagonal(diag, v * off, eigvals_only=True, select="i", select_range=(0, 0))
        return float(values[0])

    def endpoint(direction: float) -> Tuple[float, bool]:
        inside, step = 0.0, ADMISSIBLE_V_SEARCH["initial_step"]
        outside = direction * step
        while smallest(outside) > 0:
            inside = outside
            step *= 2
            outside = direction * step
            if step > ADMISSIBLE_V_SEARCH["max_abs_v"]:
                return inside, True
        while abs(outside - inside) > tol:
            mid = (inside + outside) / 2
            if smallest(mid) > 0:
                inside = mid
            else:
                outside = mid
        # report the first non-positive point: the interval is open there
        return outside, False

    v_min, lower_unbounded = endpoint(-1.0)
    v_max, upper_unbounded = endpoint(1.0)
    interval = AdmissibleInterval(v_min, v_max, tol, lower_unbounded, upper_unbounded)
    logger.info(f"Admissible v interval: ({v_min:.12g}, {v_max:.12g}), bracket width <= {tol}")
    return interval
