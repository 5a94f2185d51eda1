"""
src/ep_scanner/builders/rational_parser.py
Exact parsing of user-supplied rationals: "p/q", integers and finite decimals
"""

import re
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Any

from ..core.exceptions import ConstraintError

_FRACTION_PATTERN = re.compile(r'^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$')
_INTEGER_PATTERN = re.compile(r'^\s*[+-]?\d+\s*$')
_DECIMAL_PATTERN = re.compile(r'^\s*[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?\s*$')


def parse_rational(text: Any) -> Fraction:
    """
    Parse an exact rational number.

    Accepted forms:
        "9/10", "-3/2"    -> numerator/denominator
        "7", "-1"         -> integers
        "0.9", "1e-3"     -> finite decimals, converted exactly (0.9 -> 9/10)

    ints and Fractions pass through; floats are rejected because they are not exact.

    Raises:
        ConstraintError: malformed text, zero denominator, non-finite values
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ConstraintError(f"Boolean {text!r} is not a rational number")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        raise ConstraintError(f"Float {text!r} is not exact; write it as 'p/q' or a decimal string")
    if not isinstance(text, str):
        raise ConstraintError(f"Cannot read a rational number from {type(text).__name__}")

    match = _FRACTION_PATTERN.match(text)
    if match:
        numerator, denominator = int(match.group(1)), int(match.group(2))
        if denominator == 0:
            raise ConstraintError(f"Zero denominator in rational '{text.strip()}'")
        return Fraction(numerator, denominator)

    if _INTEGER_PATTERN.match(text):
        return Fraction(int(text))

    if _DECIMAL_PATTERN.match(text):
        try:
            return Fraction(Decimal(text.strip()))
        except (InvalidOperation, ValueError) as e:
            raise ConstraintError(f"Malformed decimal '{text.strip()}': {e}") from e

    raise ConstraintError(f"Malformed rational '{text.strip()}' (expected p/q, an integer or a decimal)")


def format_rational(value: Fraction) -> str:
    """Inverse of parse_rational for exact output: '9/10', '-2', '0'"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
