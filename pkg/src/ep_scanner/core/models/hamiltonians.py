"""
src/ep_scanner/core/models/hamiltonians.py
Data models for matrix families, coupling vectors, tridiagonal matrices and paths
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from sympy import Poly

from ..exceptions import ConstraintError, OutsideDomainError
from ...algebra.polynomials import T, constant, degree, evaluate, poly_to_json, pretty


class ModelFamily(Enum):
    """Solvable matrix families"""
    BOUNDARY_WELL = "boundary_well"   # k-parametric discrete square well
    ATM = "atm"                       # anharmonic-like, palindromic couplings
    GEGENBAUER = "gegenbauer"         # classical-orthogonal-polynomial related


class CoefficientRing(Enum):
    """Ring the entries of a TriMatrix live in"""
    RATIONAL = "rational"             # Fraction
    POLYNOMIAL_T = "polynomial_t"     # sympy Poly in the path parameter t
    FLOAT = "float"                   # Python float (numerics only)


def _format_fraction(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class CouplingVector:
    """Signed couplings lambda_1..lambda_k (lambda_1 = +lambda, lambda_2 = -mu, ...)"""
    lambdas: Tuple[Fraction, ...] = ()

    @property
    def k(self) -> int:
        return len(self.lambdas)

    def check_fits(self, size: int) -> None:
        """
        Both coupling blocks must fit into an N x N matrix: 2k <= N.
        At 2k = N the two blocks share the middle off-diagonal slot.
        """
        if size < 2:
            raise ConstraintError(f"Matrix dimension must be at least 2, got N={size}")
        if 2 * self.k > size:
            raise ConstraintError(
                f"{self.k} couplings need 2k <= N, but N={size} allows at most {size // 2}"
            )

    def check_separated(self, size: int) -> None:
        """The two coupling blocks must not share a slot: 2k <= N - 1"""
        self.check_fits(size)
        if 2 * self.k > size - 1:
            raise ConstraintError(
                f"{self.k} couplings share the middle slot at N={size}; this needs 2k <= N-1"
            )

    def check_unitarity(self) -> None:
        """Metric construction needs every |lambda_j| < 1"""
        for index, value in enumerate(self.lambdas, start=1):
            if abs(value) >= 1:
                raise OutsideDomainError(
                    f"|lambda_{index}| = {abs(value)} >= 1 lies outside the unitarity domain"
                )

    def negated(self) -> "CouplingVector":
        return CouplingVector(tuple(-value for value in self.lambdas))

    def to_strings(self) -> List[str]:
        return [_format_fraction(value) for value in self.lambdas]


@dataclass(frozen=True)
class ModelSpec:
    """Declarative description of one matrix family instance"""
    family: ModelFamily
    size: int
    couplings: CouplingVector = field(default_factory=CouplingVector)   # boundary well
    shift: Fraction = Fraction(0)                                       # boundary well
    atm_couplings: Tuple[Fraction, ...] = ()                            # g_1..g_{N//2}
    gegenbauer_a: Optional[Fraction] = None

    def to_json(self) -> Dict[str, Any]:
        document: Dict[str, Any] = {"family": self.family.value, "N": self.size}
        if self.family is ModelFamily.BOUNDARY_WELL:
            document["shift"] = _format_fraction(self.shift)
            document["couplings"] = self.couplings.to_strings()
        elif self.family is ModelFamily.ATM:
            document["couplings"] = [_format_fraction(g) for g in self.atm_couplings]
        else:
            document["a"] = _format_fraction(self.gegenbauer_a)
        return document


@dataclass(frozen=True)
class TriMatrix:
    """
    Exactly tridiagonal matrix: diag (N), upper (N-1), lower (N-1)
    upper[j] sits at (j, j+1), lower[j] at (j+1, j) (0-based)
    """
    diag: Tuple[Any, ...]
    upper: Tuple[Any, ...]
    lower: Tuple[Any, ...]
    ring: CoefficientRing = CoefficientRing.RATIONAL

    def __post_init__(self):
        if len(self.upper) != len(self.diag) - 1 or len(self.lower) != len(self.diag) - 1:
            raise ConstraintError(
                f"Tridiagonal storage mismatch: {len(self.diag)} diagonal, "
                f"{len(self.upper)} upper, {len(self.lower)} lower entries"
            )

    @property
    def size(self) -> int:
        return len(self.diag)

    def zero(self) -> Any:
        if self.ring is CoefficientRing.POLYNOMIAL_T:
            return constant(0, T)
        if self.ring is CoefficientRing.FLOAT:
            return 0.0
        return Fraction(0)

    def off_products(self) -> Tuple[Any, ...]:
        """upper_j * lower_j, the only off-diagonal data the spectrum depends on"""
        return tuple(u * l for u, l in zip(self.upper, self.lower))

    def transpose(self) -> "TriMatrix":
        return TriMatrix(self.diag, self.lower, self.upper, self.ring)

    def with_shift(self, shift: Any) -> "TriMatrix":
        return TriMatrix(tuple(d + shift for d in self.diag), self.upper, self.lower, self.ring)

    def to_dense(self) -> List[List[Any]]:
        """Explicit embedding into a dense N x N list of lists"""
        n = self.size
        dense = [[self.zero() for _ in range(n)] for _ in range(n)]
        for j in range(n):
            dense[j][j] = self.diag[j]
        for j in range(n - 1):
            dense[j][j + 1] = self.upper[j]
            dense[j + 1][j] = self.lower[j]
        return dense

    def evaluate_at(self, t: Fraction) -> "TriMatrix":
        """Specialize a polynomial-in-t matrix at a rational t"""
        if self.ring is not CoefficientRing.POLYNOMIAL_T:
            return self

        def at(entry):
            return evaluate(entry, t) if isinstance(entry, Poly) else Fraction(entry)

        return TriMatrix(
            tuple(at(d) for d in self.diag),
            tuple(at(u) for u in self.upper),
            tuple(at(l) for l in self.lower),
            CoefficientRing.RATIONAL,
        )

    def to_float(self) -> "TriMatrix":
        if self.ring is CoefficientRing.POLYNOMIAL_T:
            raise ConstraintError("Specialize the path parameter before converting to floats")
        return TriMatrix(
            tuple(float(d) for d in self.diag),
            tuple(float(u) for u in self.upper),
            tuple(float(l) for l in self.lower),
            CoefficientRing.FLOAT,
        )

    def to_numpy(self) -> np.ndarray:
        """Dense float array"""
        matrix = self if self.ring is CoefficientRing.FLOAT else self.to_float()
        dense = np.diag(np.asarray(matrix.diag, dtype=float))
        if self.size > 1:
            dense += np.diag(np.asarray(matrix.upper, dtype=float), 1)
            dense += np.diag(np.asarray(matrix.lower, dtype=float), -1)
        return dense

    def to_json(self) -> Dict[str, Any]:
        def encode(entry):
            if isinstance(entry, Poly):
                return poly_to_json(entry)["coeffs"]
            if isinstance(entry, Fraction):
                return _format_fraction(entry)
            return entry

        return {
            "ring": self.ring.value,
            "N": self.size,
            "diag": [encode(d) for d in self.diag],
            "upper": [encode(u) for u in self.upper],
            "lower": [encode(l) for l in self.lower],
        }


@dataclass(frozen=True)
class GridSpec:
    """Exact rational grid start, start+step, ... <= stop"""
    start: Fraction
    stop: Fraction
    step: Fraction

    def __post_init__(self):
        if self.step <= 0:
            raise ConstraintError(f"Grid step must be positive, got {self.step}")
        if self.stop < self.start:
            raise ConstraintError(f"Grid stop {self.stop} lies below start {self.start}")

    def points(self) -> List[Fraction]:
        count = int((self.stop - self.start) / self.step) + 1
        return [self.start + i * self.step for i in range(count)]

    def to_string(self) -> str:
        return ":".join(_format_fraction(x) for x in (self.start, self.stop, self.step))


@dataclass(frozen=True)
class PathSpec:
    """
    One-dimensional path through coupling space: slot i holds lambda_i(t)
    as a polynomial in t (constants allowed, at least one slot must move)
    """
    slots: Tuple[Poly, ...]
    size: int
    grid: Optional[GridSpec] = None
    shift: Fraction = Fraction(0)

    def __post_init__(self):
        if not any(degree(slot) > 0 for slot in self.slots):
            raise ConstraintError("A path needs at least one slot depending on t")
        CouplingVector(tuple(Fraction(0) for _ in self.slots)).check_fits(self.size)

    @property
    def k(self) -> int:
        return len(self.slots)

    def couplings_at(self, t: Fraction) -> CouplingVector:
        return CouplingVector(tuple(evaluate(slot, t) for slot in self.slots))

    def describe(self) -> str:
        """Compact slot string, e.g. 't,-t,t,-9/10'"""
        return ",".join(pretty(slot).replace(" ", "") for slot in self.slots)
