"""
src/ep_scanner/core/models/spectra.py
Data models for parameter sweeps, complexification events and exceptional-point reports
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from .algebraic import MultiplicityProfile, RootInterval
from ...algebra.polynomials import degree, poly_to_json, pretty


def _text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class SweepSample:
    """Spectrum at one grid point, sorted by (re, im)"""
    t: Fraction
    eigenvalues: Tuple[complex, ...]
    real_count: int

    @property
    def size(self) -> int:
        return len(self.eigenvalues)


@dataclass
class SweepResult:
    """Spectra along a path; samples are ordered by t"""
    path: str
    size: int
    samples: List[SweepSample] = field(default_factory=list)
    reality_tol: float = 1e-9
    path_spec: Optional[Any] = None              # PathSpec, kept for refinement

    def t_values(self) -> List[Fraction]:
        return [sample.t for sample in self.samples]

    def real_counts(self) -> List[int]:
        return [sample.real_count for sample in self.samples]

    def sample_at(self, t: Fraction) -> Optional[SweepSample]:
        for sample in self.samples:
            if sample.t == t:
                return sample
        return None


@dataclass(frozen=True)
class ComplexificationEvent:
    """Change of the real-eigenvalue count between t_lo and t_hi (bracket refined to refine_tol)"""
    t_lo: Fraction
    t_hi: Fraction
    real_before: int
    real_after: int

    @property
    def t_estimate(self) -> float:
        return float((self.t_lo + self.t_hi) / 2)

    @property
    def is_complexification(self) -> bool:
        """Real eigenvalues lost (as t increases)"""
        return self.real_after < self.real_before

    def contains(self, t: Fraction) -> bool:
        return self.t_lo <= t <= self.t_hi

    def to_json(self) -> Dict[str, Any]:
        return {
            "t_lo": _text(self.t_lo),
            "t_hi": _text(self.t_hi),
            "t_estimate": self.t_estimate,
            "real_before": self.real_before,
            "real_after": self.real_after,
        }


class CertificateKind(Enum):
    """Why a discriminant root is reported"""
    EXACT_ZERO = "exact_zero"      # rational t* with disc(t*) == 0
    SIGN_CHANGE = "sign_change"    # irrational t*, a square-free critical factor changes sign on the interval


class ReportStatus(Enum):
    OK = "ok"
    DEGENERATE_DISCRIMINANT = "degenerate_discriminant"


@dataclass
class EPEntry:
    """One real root t* of the discriminant and, when t* is rational, the exact degeneracy profile"""
    root: RootInterval
    certificate: CertificateKind
    profile: Optional[MultiplicityProfile] = None
    gcd_degree: Optional[int] = None

    @property
    def is_exact(self) -> bool:
        return self.root.exact is not None

    def to_json(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {"certificate": self.certificate.value}
        if self.root.exact is not None:
            document["t_exact"] = _text(self.root.exact)
        else:
            document["interval"] = [_text(self.root.lo), _text(self.root.hi)]
            document["t_approx"] = float(self.root.midpoint)
        if self.profile is not None:
            document["profile"] = [cluster.to_json() for cluster in self.profile.clusters]
            document["secular_at_t"] = pretty(self.profile.polynomial)
        if self.gcd_degree is not None:
            document["gcd_degree"] = self.gcd_degree
        return document


@dataclass
class EPReport:
    """Exceptional points of a secular polynomial along a path"""
    path: str
    size: int
    status: ReportStatus = ReportStatus.OK
    discriminant: Optional[Any] = None          # sympy Poly in t
    entries: List[EPEntry] = field(default_factory=list)

    def exact_points(self) -> List[Fraction]:
        return [entry.root.exact for entry in self.entries if entry.root.exact is not None]

    def entry_at(self, t: Fraction) -> Optional[EPEntry]:
        for entry in self.entries:
            if entry.root.exact == t:
                return entry
        return None

    def to_json(self) -> Dict[str, Any]:
        return {
            "path": self.path,
            "N": self.size,
            "status": self.status.value,
            "discriminant": None if self.discriminant is None else poly_to_json(self.discriminant),
            "discriminant_degree": None if self.discriminant is None else degree(self.discriminant),
            "eps": [entry.to_json() for entry in self.entries],
        }


@dataclass(frozen=True)
class FixtureReport:
    """Outcome of checking the shipped ATM polynomial"""
    checksum_ok: bool
    sha256: str
    degree: int
    test_point: int
    residual: int
    constant_term: int
    positive_real_roots: int
    real_roots: int
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def root_confirmed(self) -> bool:
        return self.residual == 0

    def to_json(self) -> Dict[str, Any]:
        return {
            "checksum_ok": self.checksum_ok,
            "sha256": self.sha256,
            "degree": self.degree,
            "test_point": self.test_point,
            "residual": str(self.residual),
            "root_confirmed": self.root_confirmed,
            "constant_term": str(self.constant_term),
            "positive_real_roots": self.positive_real_roots,
            "real_roots": self.real_roots,
            "degree_discrepancy": self.metadata.get("degree_discrepancy"),
        }
