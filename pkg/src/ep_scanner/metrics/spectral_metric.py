"""
src/ep_scanner/metrics/spectral_metric.py
Spectral-expansion metric Theta = sum_n kappa_n xi_n xi_n^T built from left eigenvectors of H
"""

import logging
from typing import Sequence, Tuple, Union

import numpy as np
from scipy.linalg import eig

from ..core.constants import TOLERANCES
from ..core.exceptions import ConstraintError, OutsideDomainError
from ..core.models.hamiltonians import TriMatrix
from ..core.models.metrics import SpectralMetric

logger = logging.getLogger(__name__)

MatrixLike = Union[TriMatrix, np.ndarray, Sequence[Sequence[float]]]


def _as_array(hamiltonian: MatrixLike) -> np.ndarray:
    if isinstance(hamiltonian, TriMatrix):
        return hamiltonian.to_numpy()
    matrix = np.asarray(hamiltonian, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ConstraintError(f"Expected a square matrix, got shape {matrix.shape}")
    if not np.all(np.isfinite(matrix)):
        raise ConstraintError("Matrix contains non-finite entries")
    return matrix


def _real_eigensystem(matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Eigenvalues (ascending), unit left eigenvectors (rows) and right eigenvectors (columns)
    of a matrix with real, non-defective spectrum.
    """
    values, left, right = eig(matrix, left=True, right=True)
    scale = max(1.0, float(np.abs(matrix).sum(axis=1).max()))
    if np.max(np.abs(values.imag)) > TOLERANCES["reality"] * scale:
        raise OutsideDomainError("Spectrum is not real: no positive metric exists")
    if np.linalg.cond(right) > TOLERANCES["eigvec_condition"]:
        raise OutsideDomainError("Eigenvectors are (numerically) incomplete: defective spectrum")

    order = np.argsort(values.real)
    values = values.real[order]
    left = left[:, order].real
    right = right[:, order].real

    left = left / np.linalg.norm(left, axis=0)
    # deterministic sign: largest component positive
    for n in range(left.shape[1]):
        if left[np.argmax(np.abs(left[:, n])), n] < 0:
            left[:, n] = -left[:, n]
    return values, left.T, right


def spectral_metric(hamiltonian: MatrixLike, kappas: Sequence[float]) -> SpectralMetric:
    """
    Assemble Theta = Xi^T diag(kappa) Xi from unit-norm left eigenvectors xi_n
    (H^T xi_n = E_n xi_n), eigenpairs ordered by ascending E_n.

    Raises:
        ConstraintError: wrong number of kappas or a non-positive kappa
        OutsideDomainError: complex or defective spectrum
    """
    matrix = _as_array(hamiltonian)
    weights = np.asarray(kappas, dtype=float)
    if weights.shape != (matrix.shape[0],):
        raise ConstraintError(f"Need {matrix.shape[0]} kappas, got {weights.size}")
    if np.any(weights <= 0):
        raise ConstraintError("All kappa_n must be positive")

    values, xi, _ = _real_eigensystem(matrix)
    theta = xi.T @ np.diag(weights) @ xi
    theta = (theta + theta.T) / 2

    residual = float(np.linalg.norm(matrix.T @ theta - theta @ matrix))
    denominator = float(np.linalg.norm(matrix) * np.linalg.norm(theta)) or 1.0
    relative = residual / denominator
    if relative > TOLERANCES["spectral_residual"]:
        logger.warning(f"Spectral metric residual {relative:.3e} exceeds {TOLERANCES['spectral_residual']}")
    logger.info(f"Spectral metric of dimension {matrix.shape[0]}, relative residual {relative:.3e}")
    return SpectralMetric(
        kappas=weights, xi=xi, theta=theta, eigenvalues=values,
        residual_norm=residual, relative_residual=relative,
    )


def fit_kappas(hamiltonian: MatrixLike, theta: Union[np.ndarray, TriMatrix]) -> np.ndarray:
    """
    Weights kappa_n that reproduce a known metric from the spectral expansion:
        kappa_n = psi_n^T Theta psi_n / (xi_n^T psi_n)^2
    with psi_n the right and xi_n the unit left eigenvectors (biorthogonal pairs).
    """
    matrix = _as_array(hamiltonian)
    target = theta.to_numpy() if isinstance(theta, TriMatrix) else np.asarray(theta, dtype=float)
    _, xi, psi = _real_eigensystem(matrix)
    kappas = np.empty(matrix.shape[0])
    for n in range(matrix.shape[0]):
        overlap = float(xi[n] @ psi[:, n])
        kappas[n] = float(psi[:, n] @ target @ psi[:, n]) / overlap ** 2
    return kappas
