"""
Exact scalars of the field Q(q).

Every scalar is a sympy ``FracElement`` of the single shared field ``FIELD``.
sympy cancels every fraction on construction (coprime numerator and
denominator, positive leading denominator coefficient), so two scalars are
equal exactly when their representations are equal and they can be used as
dictionary keys and coefficients without further normalisation.
"""

import logging
from fractions import Fraction
from math import gcd, lcm
from typing import Any, Dict, Tuple

from sympy import QQ, Basic, S, sympify
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.fields import FracElement, field
from sympy.polys.polyerrors import CoercionFailed
from sympy.polys.rings import PolyElement

from src.Models.errors import InvalidParameterError, InvalidScalarError, NotInKError

logger = logging.getLogger(__name__)

FIELD, Q = field("q", QQ)
Q_SYMBOL = FIELD.symbols[0]

# Alias used in signatures throughout the code base
RationalScalar = FracElement

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


class LaurentPolynomial:
    """
    Finite Laurent polynomial in q with exact rational coefficients.

    Zero coefficients are never stored, so equal polynomials compare equal.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Dict[int, Any]):
        self._coefficients = {
            int(exponent): Fraction(value)
            for exponent, value in coefficients.items()
            if value
        }

    @property
    def coefficients(self) -> Dict[int, Fraction]:
        return dict(self._coefficients)

    def is_zero(self) -> bool:
        return not self._coefficients

    def is_one(self) -> bool:
        return self._coefficients == {0: Fraction(1)}

    def lowest_exponent(self) -> int:
        return min(self._coefficients) if self._coefficients else 0

    def leading_coefficient(self) -> Fraction:
        if not self._coefficients:
            return Fraction(0)
        return self._coefficients[max(self._coefficients)]

    def scaled(self, factor: Fraction) -> "LaurentPolynomial":
        return LaurentPolynomial({e: c * factor for e, c in self._coefficients.items()})

    def to_text(self) -> str:
        """Render as e.g. ``q-q^-1`` with terms in descending exponent order."""
        if not self._coefficients:
            return "0"
        pieces = []
        for exponent in sorted(self._coefficients, reverse=True):
            coefficient = self._coefficients[exponent]
            if exponent == 0:
                monomial = ""
            elif exponent == 1:
                monomial = "q"
            else:
                monomial = f"q^{exponent}"

            if not monomial:
                piece = str(coefficient)
            elif coefficient == 1:
                piece = monomial
            elif coefficient == -1:
                piece = f"-{monomial}"
            else:
                piece = f"{coefficient}*{monomial}"

            if pieces and not piece.startswith("-"):
                piece = f"+{piece}"
            pieces.append(piece)
        return "".join(pieces)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._coefficients == other._coefficients

    def __hash__(self) -> int:
        return hash(frozenset(self._coefficients.items()))

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.to_text()})"


def _to_fraction(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _poly_terms(poly: PolyElement) -> Dict[int, Fraction]:
    return {monom[0]: _to_fraction(coeff) for monom, coeff in poly.terms()}


def _value_at_one(poly: PolyElement) -> Fraction:
    return sum((_to_fraction(coeff) for _, coeff in poly.terms()), Fraction(0))


def scalar_from_fraction(value: Fraction) -> RationalScalar:
    """Embed an exact rational number into Q(q)."""
    value = Fraction(value)
    return FIELD(QQ(value.numerator, value.denominator))


def from_sympy(expr: Any) -> RationalScalar:
    """
    Convert a sympy expression in the symbol q into a scalar.

    Args:
        expr: sympy expression (or anything sympify accepts)

    Returns:
        The scalar in canonical form

    Raises:
        InvalidScalarError: If the expression is not a rational function of q
    """
    try:
        expr = sympify(expr)
    except Exception as e:
        raise InvalidScalarError(f"Cannot read scalar {expr!r}: {e}") from e

    if expr.has(S.ComplexInfinity) or expr.has(S.NaN) or expr.has(S.Infinity):
        raise InvalidScalarError(f"Scalar {expr} is undefined (division by zero)")

    extra = expr.free_symbols - {Q_SYMBOL}
    if extra:
        names = ", ".join(sorted(str(s) for s in extra))
        raise InvalidScalarError(f"Scalar {expr} uses symbols other than q: {names}")

    try:
        return FIELD.from_expr(expr)
    except (ValueError, CoercionFailed) as e:
        raise InvalidScalarError(f"Scalar {expr} is not a rational function of q") from e


def parse_scalar(text: str) -> RationalScalar:
    """
    Parse the scalar text format, e.g. ``(q^2-1)/q`` or ``q-q^-1``.

    Raises:
        InvalidScalarError: On empty, malformed or undefined input
    """
    if not isinstance(text, str) or not text.strip():
        raise InvalidScalarError(f"Empty scalar text: {text!r}")
    try:
        expr = parse_expr(text, local_dict={"q": Q_SYMBOL}, transformations=_TRANSFORMATIONS)
    except Exception as e:
        raise InvalidScalarError(f"Cannot parse scalar {text!r}: {e}") from e
    return from_sympy(expr)


def to_scalar(value: Any) -> RationalScalar:
    """
    Coerce ints, Fractions, strings, sympy expressions and ring elements to Q(q).

    Raises:
        InvalidScalarError: If the value cannot be read as a scalar
    """
    if isinstance(value, FracElement):
        if value.field == FIELD:
            return value
        raise InvalidScalarError(f"Scalar {value} belongs to a different field")
    if isinstance(value, bool):
        raise InvalidScalarError("Booleans are not scalars")
    if isinstance(value, int):
        return FIELD(value)
    if isinstance(value, Fraction):
        return scalar_from_fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, PolyElement) and value.ring == FIELD.ring:
        return FIELD(value)
    if isinstance(value, Basic):
        return from_sympy(value)
    raise InvalidScalarError(f"Cannot interpret {value!r} as a scalar")


def normalize(numerator: Any, denominator: Any = 1) -> RationalScalar:
    """
    Build the canonical scalar numerator/denominator.

    Raises:
        InvalidScalarError: If the denominator is zero
    """
    den = to_scalar(denominator)
    if not den:
        raise InvalidScalarError("Zero denominator")
    return to_scalar(numerator) / den


def field_ops(a: Any, b: Any, op: str) -> RationalScalar:
    """
    Exact field arithmetic on two scalars.

    Args:
        a: Left operand
        b: Right operand
        op: One of "add", "sub", "mul", "div"

    Raises:
        InvalidScalarError: On division by zero
        InvalidParameterError: On an unknown operation name
    """
    left, right = to_scalar(a), to_scalar(b)
    if op == "add":
        return left + right
    if op == "sub":
        return left - right
    if op == "mul":
        return left * right
    if op == "div":
        if not right:
            raise InvalidScalarError("Division by zero")
        return left / right
    raise InvalidParameterError(f"Unknown scalar operation: {op}")


def inverse(a: Any) -> RationalScalar:
    value = to_scalar(a)
    if not value:
        raise InvalidScalarError("Zero has no inverse")
    return FIELD.one / value


def q_power(exponent: int) -> RationalScalar:
    return Q ** exponent


def is_regular_at_one(r: Any) -> bool:
    return _value_at_one(to_scalar(r).denom) != 0


def specialize_at_one(r: Any) -> Fraction:
    """
    Evaluate a scalar at q=1.

    Raises:
        NotInKError: If the reduced denominator vanishes at 1
    """
    value = to_scalar(r)
    den = _value_at_one(value.denom)
    if den == 0:
        raise NotInKError(f"Scalar {format_scalar(value)} has a pole at q=1")
    return _value_at_one(value.numer) / den


def laurent_parts(r: Any) -> Tuple[LaurentPolynomial, LaurentPolynomial]:
    """
    Split a scalar into Laurent numerator and denominator.

    The denominator has lowest exponent 0 and leading coefficient 1.
    """
    value = to_scalar(r)
    numer = _poly_terms(value.numer)
    denom = _poly_terms(value.denom)
    shift = min(denom)
    lead = denom[max(denom)]
    return (
        LaurentPolynomial({e - shift: c / lead for e, c in numer.items()}),
        LaurentPolynomial({e - shift: c / lead for e, c in denom.items()}),
    )


def _integral(numerator: LaurentPolynomial, denominator: LaurentPolynomial) -> Tuple[LaurentPolynomial, LaurentPolynomial]:
    coefficients = list(numerator.coefficients.values()) + list(denominator.coefficients.values())
    scale = Fraction(lcm(*(c.denominator for c in coefficients)))
    numerator, denominator = numerator.scaled(scale), denominator.scaled(scale)
    content = 0
    for c in list(numerator.coefficients.values()) + list(denominator.coefficients.values()):
        content = gcd(content, int(c))
    if content > 1:
        numerator = numerator.scaled(Fraction(1, content))
        denominator = denominator.scaled(Fraction(1, content))
    return numerator, denominator


def format_scalar(r: Any) -> str:
    """
    Render a scalar in the text format.

    Laurent polynomials print directly (``q-q^-1``); proper fractions print as
    ``(numerator)/(denominator)`` with integer coefficients and a denominator
    of lowest exponent 0 and positive leading coefficient.
    """
    numerator, denominator = laurent_parts(r)
    if denominator.is_one():
        return numerator.to_text()

    numerator, denominator = _integral(numerator, denominator)
    top = numerator.to_text()
    bottom = denominator.to_text()
    if len(numerator.coefficients) > 1:
        top = f"({top})"
    if len(denominator.coefficients) > 1:
        bottom = f"({bottom})"
    return f"{top}/{bottom}"
