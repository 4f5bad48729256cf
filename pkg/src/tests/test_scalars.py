"""
Tests for the Q(q) scalar layer: parsing, canonical text and specialization at q=1.
"""

import os
import sys
from fractions import Fraction

import pytest
from sympy import QQ

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

from src.Models.errors import InvalidParameterError, InvalidScalarError, NotInKError
from src.Scalars import (
    FIELD,
    Q,
    field_ops,
    format_scalar,
    is_regular_at_one,
    laurent_parts,
    normalize,
    parse_scalar,
    q_power,
    specialize_at_one,
    to_scalar,
)


class TestParsing:
    def test_laurent_polynomial_text(self):
        assert parse_scalar("q-q^-1") == Q - 1 / Q

    def test_rational_function_is_cancelled(self):
        assert parse_scalar("(q^2-1)/(q-1)") == Q + 1

    def test_division_by_zero(self):
        with pytest.raises(InvalidScalarError):
            parse_scalar("1/0")

    def test_foreign_symbol(self):
        with pytest.raises(InvalidScalarError):
            parse_scalar("q*z")

    @pytest.mark.parametrize("text", ["", "   ", "q+*"])
    def test_malformed(self, text):
        with pytest.raises(InvalidScalarError):
            parse_scalar(text)

    def test_to_scalar_coercions(self):
        assert to_scalar(3) == FIELD(3)
        assert to_scalar(Fraction(1, 2)) == FIELD(QQ(1, 2))
        assert to_scalar("q") == Q
        with pytest.raises(InvalidScalarError):
            to_scalar(True)

    def test_normalize_zero_denominator(self):
        with pytest.raises(InvalidScalarError):
            normalize(1, 0)


class TestFormatting:
    """Test canonical scalar text."""

    @pytest.mark.parametrize(
        "value, text",
        [
            (Q - 1 / Q, "q-q^-1"),
            (1 / Q, "q^-1"),
            (FIELD(QQ(3, 2)), "3/2"),
            (-Q + 2, "-q+2"),
            (Q / (Q ** 2 + 1), "q/(q^2+1)"),
            (FIELD(0), "0"),
        ],
    )
    def test_canonical_text(self, value, text):
        assert format_scalar(value) == text

    def test_text_round_trips_through_parser(self):
        value = (Q ** 3 - 2) / (3 * Q ** 2 + Q)
        assert parse_scalar(format_scalar(value)) == value

    def test_laurent_parts_denominator_is_monic(self):
        numerator, denominator = laurent_parts(Q / (2 * Q ** 2 + 2))
        assert denominator.lowest_exponent() == 0
        assert denominator.leading_coefficient() == 1


class TestSpecialization:
    def test_regular_value(self):
        assert specialize_at_one(parse_scalar("(q^2+1)/q")) == Fraction(2)

    def test_pole_at_one(self):
        assert not is_regular_at_one("1/(q-1)")
        with pytest.raises(NotInKError):
            specialize_at_one("1/(q-1)")

    def test_removable_singularity_is_cancelled_first(self):
        assert is_regular_at_one("(q^2-1)/(q-1)")
        assert specialize_at_one("(q^2-1)/(q-1)") == Fraction(2)

    def test_q_power(self):
        assert q_power(-2) * Q ** 2 == FIELD.one
        assert specialize_at_one(q_power(-3)) == Fraction(1)


class TestFieldOps:
    """Test exact arithmetic through field_ops."""

    def test_add(self):
        assert field_ops("q", "q^-1", "add") == (Q ** 2 + 1) / Q

    def test_inverse_product(self):
        assert field_ops("(q+q^-1)^-1", "q+q^-1", "mul") == FIELD.one

    def test_div(self):
        assert field_ops(1, "q-1", "div") == 1 / (Q - 1)

    def test_division_by_zero(self):
        with pytest.raises(InvalidScalarError):
            field_ops(1, 0, "div")

    def test_unknown_operation(self):
        with pytest.raises(InvalidParameterError):
            field_ops(1, 2, "pow")
