"""
src/ep_scanner/analysis/ep_locator.py
EXCEPTIONAL-POINT LOCATOR: real roots of the s-discriminant along a coupling path

Pipeline for one secular polynomial P(s, t):
1. discriminant in s plus its critical factors (exact, Z[t])
2. square-free merge of the factors, deflated to w = t^2 when every factor is even in t
3. certified real-root isolation, exact certification of rational roots
4. multiplicity profile of P(s, t*) at every rational t*
"""

import logging
from fractions import Fraction
from math import isqrt
from typing import Any, Dict, List, Optional, Tuple

from sympy import Poly

from ..algebra.atm_fixture import load_atm_fixture
from ..algebra.discriminant import discriminant_with_factors
from ..algebra.multiplicity import multiplicity_profile
from ..algebra.polynomials import (
    S, W, deflate_even, degree, eval_bigint, evaluate, evaluate_t, integer_primitive, is_even,
)
from ..algebra.root_isolation import count_real_roots, isolate_real_roots
from ..core import config
from ..core.constants import ATM_FIXTURE_TEST_POINT
from ..core.exceptions import ConstraintError
from ..core.models.algebraic import RootInterval
from ..core.models.spectra import CertificateKind, EPEntry, EPReport, FixtureReport, ReportStatus

logger = logging.getLogger(__name__)


def _merge(factors: List[Poly]) -> Poly:
    """Primitive square-free lcm of the factors"""
    merged = factors[0].sqf_part()
    for factor in factors[1:]:
        merged = merged.lcm(factor.sqf_part())
    return integer_primitive(merged)


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """sqrt(value) when it is rational, else None (value >= 0)"""
    num, den = isqrt(value.numerator), isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def _sqrt_bracket(lo: Fraction, hi: Fraction, denominator: int) -> Tuple[Fraction, Fraction]:
    """Rationals a <= sqrt(lo) and b > sqrt(hi) on the grid 1/denominator"""
    below = isqrt(lo.numerator * denominator * denominator // lo.denominator)
    above = isqrt(hi.numerator * denominator * denominator // hi.denominator) + 1
    return Fraction(below, denominator), Fraction(above, denominator)


def _roots_in_t(merged: Poly, width: Fraction) -> List[RootInterval]:
    return isolate_real_roots(merged, width=width, certify=True, square_free=True)


def _roots_in_w(merged: Poly, width: Fraction) -> List[RootInterval]:
    """
    Roots t = ±sqrt(w) for the non-negative roots w of a square-free polynomial in w = t^2.

    Intervals in w are refined to width (width/2)^2, which keeps the t-intervals below width.
    """
    denominator = int(4 / width) + 1
    roots: List[RootInterval] = []
    for root in isolate_real_roots(merged, width=(width / 2) ** 2, certify=True, square_free=True):
        if root.exact is not None:
            w = root.exact
            if w < 0:
                continue
            if w == 0:
                roots.append(RootInterval(w, w, w))
                continue
            t = _rational_sqrt(w)
            if t is not None:
                roots.extend([RootInterval(-t, -t, -t), RootInterval(t, t, t)])
                continue
            lo, hi = w, w
        else:
            lo, hi = root.lo, root.hi
            if hi <= 0:
                continue
            if lo < 0:
                # the root is the one in (lo, hi]; 0 is not a root, so check which side holds it
                if _sign(evaluate(merged, 0)) == _sign(evaluate(merged, hi)):
                    continue
                lo = Fraction(0)
        below, above = _sqrt_bracket(lo, hi, denominator)
        roots.extend([RootInterval(-above, -below), RootInterval(below, above)])
    roots.sort(key=lambda interval: interval.midpoint)
    return roots


def critical_roots(factors: List[Poly], width: Fraction) -> List[RootInterval]:
    """Distinct real roots of the product of the critical factors, ascending"""
    if not factors:
        return []
    if all(is_even(f) for f in factors):
        merged = _merge([deflate_even(f, W) for f in factors])
        logger.debug(f"Critical polynomial deflated to w = t^2, degree {degree(merged)}")
        return _roots_in_w(merged, width) if degree(merged) > 0 else []

    merged = _merge(factors)
    logger.debug(f"Critical polynomial of degree {degree(merged)}")
    return _roots_in_t(merged, width) if degree(merged) > 0 else []


def ep_on_path(secular: Poly, path: str = "", width: Optional[float] = None) -> EPReport:
    """
    Exceptional points of P(s, t): every real t* where P(., t*) has a multiple root.

    Rational t* carry an exact certificate and the degeneracy profile of P(s, t*);
    irrational t* are reported as isolating intervals of width <= width.

    Raises:
        ZeroPolynomialError, ConstraintError: from the discriminant (zero input, degree < 2)
    """
    target = Fraction(width if width is not None else float(config.root_width))
    if target <= 0:
        raise ConstraintError(f"Root width must be positive, got {width}")

    disc, factors = discriminant_with_factors(secular)
    report = EPReport(path=path, size=degree(secular, S), discriminant=disc)
    if disc.is_zero:
        report.status = ReportStatus.DEGENERATE_DISCRIMINANT
        logger.warning(f"Degenerate discriminant on path ({path}): every t is an exceptional point")
        return report

    for root in critical_roots(factors, target):
        if root.exact is None:
            logger.warning(f"Irrational exceptional point in ({float(root.lo):.12g}, {float(root.hi):.12g}]: "
                           f"no exact profile")
            report.entries.append(EPEntry(root=root, certificate=CertificateKind.SIGN_CHANGE))
            continue
        at_root = evaluate_t(secular, root.exact)
        profile = multiplicity_profile(at_root)
        gcd_degree = degree(at_root.gcd(at_root.diff(S)))
        report.entries.append(EPEntry(root=root, certificate=CertificateKind.EXACT_ZERO,
                                      profile=profile, gcd_degree=gcd_degree))
        logger.info(f"EP at t = {root.exact}: {profile.summary()}")

    logger.info(f"Found {len(report.entries)} exceptional points on ({path}), "
                f"{len(report.exact_points())} exact")
    return report


def verify_atm_fixture(fixture_dir: Optional[str] = None, test_point: int = ATM_FIXTURE_TEST_POINT) -> FixtureReport:
    """
    Checksum, exact value at D = test_point and certified counts of real roots of the ATM polynomial.

    Raises:
        FixtureIntegrityError: missing or corrupted fixture
    """
    polynomial, metadata = load_atm_fixture(fixture_dir)
    residual = eval_bigint(polynomial, test_point)
    positive = count_real_roots(polynomial, lo=Fraction(0), multiplicity=False)
    total = count_real_roots(polynomial, multiplicity=False)

    if residual != 0:
        logger.warning(f"ATM fixture does not vanish at D = {test_point}: residual {residual}")
    report = FixtureReport(
        checksum_ok=True,
        sha256=metadata["sha256"],
        degree=degree(polynomial),
        test_point=test_point,
        residual=residual,
        constant_term=int(polynomial.nth(0)),
        positive_real_roots=positive,
        real_roots=total,
        metadata=metadata,
    )
    logger.info(f"ATM fixture: degree {report.degree}, {positive} positive real roots of {total}")
    return report


def report_summary(report: EPReport) -> Dict[str, Any]:
    """Compact view for console output and the run manifest"""
    return {
        "status": report.status.value,
        "discriminant_degree": degree(report.discriminant) if report.discriminant is not None else None,
        "exact": [str(t) for t in report.exact_points()],
        "intervals": sum(1 for entry in report.entries if not entry.is_exact),
    }
