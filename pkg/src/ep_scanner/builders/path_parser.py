"""
src/ep_scanner/builders/path_parser.py
Parsing of compact coupling-path strings ("t,-t,t,-9/10") and t-grids ("-3/2:3/2:1/100")
"""

import logging
import re
from fractions import Fraction
from typing import Optional, Union

from sympy import Poly

from .rational_parser import parse_rational
from ..algebra.polynomials import T, constant, monomial
from ..core.exceptions import ConstraintError
from ..core.models.hamiltonians import GridSpec, PathSpec

logger = logging.getLogger(__name__)


class PathParser:
    """
    Reads one coupling slot per comma-separated field.

    Each field is a polynomial in t with rational coefficients, written as
    a sum of terms. Supported term shapes (tried in order):
        "-9/10*t^2", "3*t", "(1/2)t", "t^3", "-t", "t", "9/10", "0.9"

    Anything else (1/t, sqrt(t), t*t without '^', ...) is rejected:
    the exact algebra only handles polynomial paths.
    """

    # coefficient * t ^ power, coefficient and power optional
    TERM_PATTERNS = [
        # (p/q)*t^k  or (p/q)t^k
        re.compile(r'^\((?P<coef>[+-]?[\d./]+)\)\*?t(\^(?P<power>\d+))?$'),
        # p/q*t^k, 3*t, 0.5*t^2
        re.compile(r'^(?P<coef>[\d.]+(/\d+)?)\*t(\^(?P<power>\d+))?$'),
        # 2t, 3t^2
        re.compile(r'^(?P<coef>[\d.]+)t(\^(?P<power>\d+))?$'),
        # t, t^2
        re.compile(r'^t(\^(?P<power>\d+))?$'),
        # pure constant
        re.compile(r'^(?P<const>[\d.]+(/\d+)?([eE][+-]?\d+)?)$'),
    ]

    SPLIT_PATTERN = re.compile(r'(?<![eE/^(])(?=[+-])')

    def parse_slot(self, text: str) -> Poly:
        """Parse a single slot into a sympy Poly in t"""
        compact = re.sub(r'\s+', '', text or '')
        if not compact:
            raise ConstraintError("Empty coupling slot in path")

        result = constant(0, T)
        for raw_term in self.SPLIT_PATTERN.split(compact):
            if not raw_term:
                continue
            sign = 1
            term = raw_term
            while term and term[0] in '+-':
                if term[0] == '-':
                    sign = -sign
                term = term[1:]
            if not term:
                raise ConstraintError(f"Dangling sign in coupling slot '{text}'")
            result = result + self._parse_term(term, text) * sign
        return result

    def _parse_term(self, term: str, original: str) -> Poly:
        for pattern in self.TERM_PATTERNS:
            match = pattern.match(term)
            if not match:
                continue
            groups = match.groupdict()
            if groups.get('const') is not None:
                return constant(parse_rational(groups["const"]), T)
            coefficient = parse_rational(groups['coef']) if groups.get('coef') else Fraction(1)
            power = int(groups['power']) if groups.get('power') else 1
            return monomial(coefficient, power, T)
        raise ConstraintError(
            f"Coupling slot '{original}' is not a polynomial in t (offending term '{term}')"
        )

    def parse_path(self, text: str, size: int, grid: Optional[Union[str, GridSpec]] = None,
                   shift: Union[str, Fraction, int] = 0) -> PathSpec:
        """Parse 't,-t,t,-9/10' into a PathSpec of dimension size"""
        if not text or not text.strip():
            raise ConstraintError("Path string is empty")
        slots = tuple(self.parse_slot(field) for field in text.split(','))
        if isinstance(grid, str):
            grid = parse_grid(grid)
        path = PathSpec(slots=slots, size=size, grid=grid, shift=parse_rational(shift))
        logger.debug(f"Parsed path '{text}' into {path.k} slots for N={size}")
        return path


def parse_grid(text: str) -> GridSpec:
    """'start:stop:step' with exact rationals, e.g. '-3/2:3/2:1/100' or '-1.5:1.5:0.01'"""
    parts = [part.strip() for part in (text or '').split(':')]
    if len(parts) != 3 or not all(parts):
        raise ConstraintError(f"Grid '{text}' must have the form start:stop:step")
    start, stop, step = (parse_rational(part) for part in parts)
    return GridSpec(start=start, stop=stop, step=step)


def parse_path(text: str, size: int, grid: Optional[Union[str, GridSpec]] = None,
               shift: Union[str, Fraction, int] = 0) -> PathSpec:
    """Module-level shortcut around PathParser.parse_path"""
    return PathParser().parse_path(text, size, grid=grid, shift=shift)
