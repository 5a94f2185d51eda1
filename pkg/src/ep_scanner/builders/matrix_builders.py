"""
src/ep_scanner/builders/matrix_builders.py
MATRIX BUILDERS: exact tridiagonal representatives of the three solvable families

- boundary well: k couplings in antisymmetric, sign-changing blocks at both ends
- ATM: equidistant diagonal, palindromic antisymmetric couplings
- Gegenbauer: zero diagonal, closed-form rational couplings in a > 0

The boundary-well builder also accepts coupling slots that are polynomials in t,
which yields a TriMatrix over Q[t] for the exact secular algebra.
"""

import logging
from fractions import Fraction
from typing import Sequence, Union

from sympy import Poly

from .rational_parser import parse_rational
from ..algebra.polynomials import T, constant
from ..core.exceptions import ConstraintError, SingularParameterError
from ..core.models.hamiltonians import (
    CoefficientRing, CouplingVector, ModelFamily, ModelSpec, PathSpec, TriMatrix,
)

logger = logging.getLogger(__name__)

Entry = Union[Fraction, Poly]


def _boundary_well_entries(size: int, lambdas: Sequence[Entry], shift: Entry, one: Entry):
    """Shared layout for rational and polynomial couplings"""
    k = len(lambdas)
    upper = [-one] * (size - 1)
    lower = [-one] * (size - 1)
    # mirrored block at N-2-j (0-based), written first so that at 2k = N
    # the shared middle slot keeps the left-block entries
    for j, value in enumerate(lambdas):
        upper[size - 2 - j] = -one + value
        lower[size - 2 - j] = -one - value
    for j, value in enumerate(lambdas):
        upper[j] = -one - value
        lower[j] = -one + value
    logger.debug(f"Boundary well N={size}, k={k}: {max(size - 1 - 2 * k, 0)} uncoupled off-diagonal entries")
    return tuple([shift] * size), tuple(upper), tuple(lower)


def build_boundary_well(size: int, couplings: CouplingVector, shift: Union[Fraction, int, str] = 0) -> TriMatrix:
    """
    k-parametric N x N well with couplings lambda_1..lambda_k at both boundaries.

    upper_j = -1 - lambda_j, lower_j = -1 + lambda_j for j <= k,
    mirrored with swapped signs at the far end, -1 elsewhere, shift on the diagonal.

    Raises:
        ConstraintError: N < 2 or 2k > N
    """
    couplings.check_fits(size)
    diag, upper, lower = _boundary_well_entries(
        size, couplings.lambdas, parse_rational(shift), Fraction(1)
    )
    return TriMatrix(diag, upper, lower, CoefficientRing.RATIONAL)


def build_boundary_well_on_path(path: PathSpec) -> TriMatrix:
    """Boundary well whose couplings are the path slots lambda_i(t), entries in Q[t]"""
    one = constant(1, T)
    diag, upper, lower = _boundary_well_entries(
        path.size, path.slots, constant(path.shift, T), one
    )
    return TriMatrix(diag, upper, lower, CoefficientRing.POLYNOMIAL_T)


def build_atm(size: int, g: Sequence[Union[Fraction, int, str]]) -> TriMatrix:
    """
    Anharmonic-like matrix: diag_j = 2j - 1 - N, upper = +g~, lower = -g~.

    g holds g_1..g_ceil((N-1)/2) (N=2 and N=4 take one and two couplings);
    the palindrome g~_{N-j} = g~_j completes it.

    Raises:
        ConstraintError: N < 2 or wrong number of couplings
    """
    if size < 2:
        raise ConstraintError(f"Matrix dimension must be at least 2, got N={size}")
    expected = size // 2
    if len(g) != expected:
        raise ConstraintError(
            f"ATM matrix of dimension {size} takes {expected} couplings g_1..g_{expected}, got {len(g)}"
        )
    values = [parse_rational(value) for value in g]
    # 0-based position j pairs with N-2-j; for even N the middle entry is its own mirror
    extended = [values[min(j, size - 2 - j)] for j in range(size - 1)]
    diag = tuple(Fraction(2 * j - 1 - size) for j in range(1, size + 1))
    return TriMatrix(
        diag,
        tuple(extended),
        tuple(-value for value in extended),
        CoefficientRing.RATIONAL,
    )


def build_gegenbauer(size: int, a: Union[Fraction, int, str]) -> TriMatrix:
    """
    Gegenbauer-related matrix with zero diagonal:
    upper_j = 1/(2a + 2j - 2), lower_j = (2a + j - 1)/(2a + 2j), j = 1..N-1

    Raises:
        ConstraintError: N < 2 or a <= 0
        SingularParameterError: a vanishing denominator
    """
    if size < 2:
        raise ConstraintError(f"Matrix dimension must be at least 2, got N={size}")
    a = parse_rational(a)
    if a <= 0:
        # denominators 2a, 2a + 2, ..., 2a + 2N - 2 vanish for a = 0, -1, ..., -(N-1)
        if a.denominator == 1 and -a <= size - 1:
            raise SingularParameterError(f"Gegenbauer parameter a={a} gives a zero denominator")
        raise ConstraintError(f"Gegenbauer parameter must be positive, got a={a}")
    upper = [1 / (2 * a + 2 * j - 2) for j in range(1, size)]
    lower = [(2 * a + j - 1) / (2 * a + 2 * j) for j in range(1, size)]
    return TriMatrix(tuple(Fraction(0) for _ in range(size)), tuple(upper), tuple(lower), CoefficientRing.RATIONAL)


def build_model(spec: ModelSpec) -> TriMatrix:
    """Dispatch on the family tag of a ModelSpec"""
    if spec.family is ModelFamily.BOUNDARY_WELL:
        matrix = build_boundary_well(spec.size, spec.couplings, spec.shift)
    elif spec.family is ModelFamily.ATM:
        matrix = build_atm(spec.size, spec.atm_couplings)
    elif spec.family is ModelFamily.GEGENBAUER:
        if spec.gegenbauer_a is None:
            raise ConstraintError("Gegenbauer model needs the parameter 'a'")
        matrix = build_gegenbauer(spec.size, spec.gegenbauer_a)
    else:
        raise ConstraintError(f"Unknown model family: {spec.family}")
    logger.info(f"Built {spec.family.value} matrix of dimension {matrix.size}")
    return matrix
