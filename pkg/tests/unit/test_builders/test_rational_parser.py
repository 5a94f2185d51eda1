"""
Tests for exact rational parsing
"""

from fractions import Fraction

import pytest

from ep_scanner.builders.rational_parser import format_rational, parse_rational
from ep_scanner.core.exceptions import ConstraintError


class TestParseRational:

    @pytest.mark.parametrize("text,expected", [
        ("9/10", Fraction(9, 10)),
        ("-3/2", Fraction(-3, 2)),
        ("7", Fraction(7)),
        ("-1", Fraction(-1)),
        ("0.9", Fraction(9, 10)),
        ("-0.05", Fraction(-1, 20)),
        ("1e-3", Fraction(1, 1000)),
        (" 4/6 ", Fraction(2, 3)),
    ])
    def test_accepted_forms(self, text, expected):
        assert parse_rational(text) == expected

    def test_passthrough_values(self):
        assert parse_rational(Fraction(1, 3)) == Fraction(1, 3)
        assert parse_rational(5) == Fraction(5)

    @pytest.mark.parametrize("text", ["1/0", "abc", "inf", "nan", "", "1/2/3", "t"])
    def test_rejected_forms(self, text):
        with pytest.raises(ConstraintError):
            parse_rational(text)

    def test_floats_and_bools_are_rejected(self):
        with pytest.raises(ConstraintError):
            parse_rational(0.9)
        with pytest.raises(ConstraintError):
            parse_rational(True)

    def test_zero_denominator_message(self):
        with pytest.raises(ConstraintError, match="Zero denominator"):
            parse_rational("1/0")


class TestFormatRational:

    def test_integers_and_fractions(self):
        assert format_rational(Fraction(-2)) == "-2"
        assert format_rational(Fraction(9, 10)) == "9/10"
        assert format_rational(Fraction(0)) == "0"

    def test_inverse_of_parse(self):
        for text in ["9/10", "-3/2", "7", "0"]:
            assert format_rational(parse_rational(text)) == text
