"""
src/ep_scanner/core/models/metrics.py
Data models for Hilbert-space metrics: diagonal, pseudometric, tridiagonal mixture, spectral expansion
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

import numpy as np

from .hamiltonians import CoefficientRing, TriMatrix


def _text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class DiagonalMetric:
    """Diagonal metric entries z_1..z_N (palindromic, positive inside the unitarity domain)"""
    z: Tuple[Fraction, ...]

    @property
    def size(self) -> int:
        return len(self.z)

    def determinant(self) -> Fraction:
        result = Fraction(1)
        for value in self.z:
            result *= value
        return result

    def to_trimatrix(self) -> TriMatrix:
        zeros = tuple(Fraction(0) for _ in range(self.size - 1))
        return TriMatrix(self.z, zeros, zeros, CoefficientRing.RATIONAL)

    def to_json(self) -> Dict[str, Any]:
        return {"diag": [_text(value) for value in self.z]}


@dataclass(frozen=True)
class Pseudometric:
    """Symmetric tridiagonal pseudometric with zero diagonal; off holds the shared off-diagonal"""
    off: Tuple[Fraction, ...]

    @property
    def size(self) -> int:
        return len(self.off) + 1

    def to_trimatrix(self) -> TriMatrix:
        return TriMatrix(tuple(Fraction(0) for _ in range(self.size)), self.off, self.off, CoefficientRing.RATIONAL)

    def to_json(self) -> Dict[str, Any]:
        return {"off": [_text(value) for value in self.off]}


@dataclass(frozen=True)
class TridiagMetric:
    """Theta = base + v * pseudo"""
    base: DiagonalMetric
    pseudo: Pseudometric
    v: Fraction = Fraction(0)

    def to_trimatrix(self) -> TriMatrix:
        off = tuple(self.v * value for value in self.pseudo.off)
        return TriMatrix(self.base.z, off, off, CoefficientRing.RATIONAL)

    def to_json(self) -> Dict[str, Any]:
        theta = self.to_trimatrix()
        return {
            "v": _text(self.v),
            "diag": [_text(value) for value in theta.diag],
            "off": [_text(value) for value in theta.upper],
        }


@dataclass(frozen=True)
class CryptoResidual:
    """Exact H^T Theta - Theta H, stored sparsely as {(row, col): value} (nonzero entries only)"""
    size: int
    entries: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)

    @property
    def is_exact_zero(self) -> bool:
        return not self.entries

    @property
    def nonzero_count(self) -> int:
        return len(self.entries)

    def to_dense(self):
        dense = [[Fraction(0)] * self.size for _ in range(self.size)]
        for (row, col), value in self.entries.items():
            dense[row][col] = value
        return dense

    def describe(self) -> str:
        if self.is_exact_zero:
            return "exact-zero"
        return f"{self.nonzero_count} nonzero entries"


@dataclass(frozen=True)
class AdmissibleInterval:
    """Open interval (v_min, v_max) of mixing weights with a positive definite metric"""
    v_min: float
    v_max: float
    tol: float
    lower_unbounded: bool = False
    upper_unbounded: bool = False

    def contains(self, v: float) -> bool:
        return (self.lower_unbounded or v > self.v_min) and (self.upper_unbounded or v < self.v_max)

    def to_json(self) -> Dict[str, Any]:
        return {
            "v_min": None if self.lower_unbounded else self.v_min,
            "v_max": None if self.upper_unbounded else self.v_max,
            "bracket_width": self.tol,
            "open": True,
        }


@dataclass
class SpectralMetric:
    """Theta = sum_n kappa_n xi_n xi_n^T from unit-norm left eigenvectors"""
    kappas: np.ndarray
    xi: np.ndarray                  # rows are left eigenvectors
    theta: np.ndarray
    eigenvalues: np.ndarray
    residual_norm: float = 0.0
    relative_residual: Optional[float] = None

    def min_eigenvalue(self) -> float:
        return float(np.linalg.eigvalsh(self.theta).min())
