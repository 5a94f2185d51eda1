"""
src/ep_scanner/core/models/algebraic.py
Data models for exact root information: isolating intervals, root clusters, multiplicity profiles
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from sympy import Poly

from ...algebra.polynomials import degree, poly_to_json, pretty


def _text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class ClusterKind(Enum):
    """How exactly a group of roots is known"""
    RATIONAL = "rational"        # single root s = value
    QUADRATIC = "quadratic"      # pair of roots of s^2 - c (c not a rational square)
    UNRESOLVED = "unresolved"    # square-free factor returned unevaluated


@dataclass(frozen=True)
class RootInterval:
    """Isolating interval (lo, hi] of one real root; exact is set when the root is a certified rational"""
    lo: Fraction
    hi: Fraction
    exact: Optional[Fraction] = None

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return self.exact if self.exact is not None else (self.lo + self.hi) / 2

    def contains(self, value: Fraction) -> bool:
        if self.exact is not None:
            return value == self.exact
        return self.lo < value <= self.hi

    def to_json(self) -> Dict[str, Any]:
        if self.exact is not None:
            return {"exact": _text(self.exact)}
        return {"interval": [_text(self.lo), _text(self.hi)]}


@dataclass(frozen=True)
class RootCluster:
    """A group of equal-multiplicity roots described exactly"""
    kind: ClusterKind
    multiplicity: int
    value: Optional[Fraction] = None        # RATIONAL
    square: Optional[Fraction] = None       # QUADRATIC: roots of s^2 - square
    factor: Optional[Poly] = None           # UNRESOLVED

    @property
    def root_count(self) -> int:
        """Distinct roots in the cluster"""
        if self.kind is ClusterKind.RATIONAL:
            return 1
        if self.kind is ClusterKind.QUADRATIC:
            return 2
        return degree(self.factor)

    def describe(self) -> str:
        if self.kind is ClusterKind.RATIONAL:
            label = f"s = {_text(self.value)}"
        elif self.kind is ClusterKind.QUADRATIC:
            if self.square > 0:
                label = f"s = ±sqrt({_text(self.square)})"
            else:
                label = f"s = ±i*sqrt({_text(-self.square)})"
        else:
            label = f"roots of {pretty(self.factor)}"
        return f"{label} (x{self.multiplicity})"

    def to_json(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {"kind": self.kind.value, "multiplicity": self.multiplicity}
        if self.kind is ClusterKind.RATIONAL:
            document["value"] = _text(self.value)
        elif self.kind is ClusterKind.QUADRATIC:
            document["square"] = _text(self.square)
        else:
            document["factor"] = poly_to_json(self.factor)
        return document


@dataclass
class MultiplicityProfile:
    """Exact square-free decomposition of a polynomial plus its exactly known root clusters"""
    polynomial: Poly
    square_free: List[Tuple[Poly, int]] = field(default_factory=list)
    clusters: List[RootCluster] = field(default_factory=list)

    @property
    def total_multiplicity(self) -> int:
        """Sum of multiplicities over all roots; equals the degree"""
        return sum(degree(factor) * multiplicity for factor, multiplicity in self.square_free)

    def multiplicity_of(self, value: Fraction) -> int:
        for cluster in self.clusters:
            if cluster.kind is ClusterKind.RATIONAL and cluster.value == value:
                return cluster.multiplicity
        return 0

    def quadratic(self, square: Fraction) -> Optional[RootCluster]:
        for cluster in self.clusters:
            if cluster.kind is ClusterKind.QUADRATIC and cluster.square == square:
                return cluster
        return None

    def summary(self) -> str:
        return ", ".join(cluster.describe() for cluster in self.clusters)

    def to_json(self) -> Dict[str, Any]:
        return {
            "polynomial": poly_to_json(self.polynomial),
            "square_free": [
                {"factor": poly_to_json(factor), "multiplicity": multiplicity}
                for factor, multiplicity in self.square_free
            ],
            "clusters": [cluster.to_json() for cluster in self.clusters],
        }
