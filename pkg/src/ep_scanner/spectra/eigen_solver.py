"""
src/ep_scanner/spectra/eigen_solver.py
NUMERICAL SPECTRA of real tridiagonal matrices

Strategy:
1. split the matrix where upper_j * lower_j == 0 exactly (block-triangular, spectrum = union of blocks)
2. blocks whose products are all positive are similar to a symmetric tridiagonal matrix
   (diagonal similarity, off-diagonals sqrt(u_j l_j)) and go to the symmetric solver
3. every other block goes to the general nonsymmetric solver on its dense embedding
"""

import logging
import math
from typing import List, Sequence, Tuple

import numpy as np
from scipy.linalg import eigh_tridiagonal, eigvals

from ..core.constants import TOLERANCES
from ..core.exceptions import ConstraintError
from ..core.models.hamiltonians import CoefficientRing, TriMatrix

logger = logging.getLogger(__name__)


def _blocks(products: Sequence) -> List[Tuple[int, int]]:
    """Index ranges [start, stop) between exactly vanishing off-diagonal products"""
    blocks, start = [], 0
    for j, product in enumerate(products):
        if product == 0:
            blocks.append((start, j + 1))
            start = j + 1
    blocks.append((start, len(products) + 1))
    return blocks


def symmetrizing_scales(upper: Sequence[float], lower: Sequence[float]) -> np.ndarray:
    """
    Diagonal D with D^-1 M D symmetric, for off-diagonal products all positive:
    d_1 = 1, d_{j+1} = d_j * sqrt(l_j / u_j), so both off-diagonals become sign(u_j) sqrt(u_j l_j)
    """
    scales = np.ones(len(upper) + 1)
    for j, (u, l) in enumerate(zip(upper, lower)):
        scales[j + 1] = scales[j] * math.sqrt(l / u)
    return scales


def matrix_norm(matrix: TriMatrix) -> float:
    """Infinity norm of the dense embedding"""
    rows = []
    for j in range(matrix.size):
        total = abs(float(matrix.diag[j]))
        if j < matrix.size - 1:
            total += abs(float(matrix.upper[j]))
        if j > 0:
            total += abs(float(matrix.lower[j - 1]))
        rows.append(total)
    return max(rows)


def eigs(matrix: TriMatrix) -> np.ndarray:
    """
    All N eigenvalues (complex array) sorted by (re, im).

    Rational matrices are split on exact zero products before conversion to floats.

    Raises:
        ConstraintError: polynomial entries or non-finite values
    """
    if matrix.ring is CoefficientRing.POLYNOMIAL_T:
        raise ConstraintError("Specialize the path parameter before computing eigenvalues")
    products = matrix.off_products()

    diag = np.asarray([float(d) for d in matrix.diag])
    upper = np.asarray([float(u) for u in matrix.upper])
    lower = np.asarray([float(l) for l in matrix.lower])
    if not (np.all(np.isfinite(diag)) and np.all(np.isfinite(upper)) and np.all(np.isfinite(lower))):
        raise ConstraintError("Matrix contains non-finite entries")

    values: List[complex] = []
    for start, stop in _blocks(products):
        block_diag = diag[start:stop]
        if stop - start == 1:
            values.append(complex(block_diag[0]))
            continue
        block_products = products[start:stop - 1]
        if all(p > 0 for p in block_products):
            block_upper = upper[start:stop - 1]
            scales = symmetrizing_scales(block_upper, lower[start:stop - 1])
            off = block_upper * scales[1:] / scales[:-1]
            values.extend(complex(v) for v in eigh_tridiagonal(block_diag, off, eigvals_only=True))
        else:
            dense = np.diag(block_diag) + np.diag(upper[start:stop - 1], 1) + np.diag(lower[start:stop - 1], -1)
            values.extend(complex(v) for v in eigvals(dense))

    result = np.asarray(values, dtype=complex)
    order = np.lexsort((result.imag, result.real))
    return result[order]


def reality_threshold(matrix: TriMatrix, tol: float = TOLERANCES["reality"]) -> float:
    return tol * max(1.0, matrix_norm(matrix))


def count_real(values: np.ndarray, threshold: float) -> int:
    """Eigenvalues with |im| <= threshold"""
    return int(np.sum(np.abs(np.asarray(values).imag) <= threshold))


def real_count_at(matrix: TriMatrix, tol: float = TOLERANCES["reality"]) -> int:
    return count_real(eigs(matrix), reality_threshold(matrix, tol))
