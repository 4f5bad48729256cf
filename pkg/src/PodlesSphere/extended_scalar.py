"""
Scalars of the quartic extension K(i, s) with i^2 = -1 and s^2 = sigma.

sigma is (q + q^-1)^-1 = q/(q^2 + 1) over Q(q), and 1/2 after specializing
at q=1. Coordinates live in a sympy fraction field whose first generator is
q: the shared Q(q) field, or a parameter field such as Q(q, alpha, beta).
"""

from fractions import Fraction
from typing import Any, Dict, Tuple

from sympy import QQ
from sympy.polys.fields import FracElement, field

from src.Models.errors import InvalidScalarError
from src.Scalars import FIELD, Q, format_scalar, specialize_at_one, scalar_from_fraction

SIGMA = Q / (Q ** 2 + 1)
SIGMA_AT_ONE = FIELD(QQ(1, 2))

PARAMETER_FIELD, PQ, ALPHA, BETA = field("q,alpha,beta", QQ)
PARAMETER_SIGMA = PQ / (PQ ** 2 + 1)

BASIS = ("1", "i", "s", "i*s")


def _lift(value: Any, target) -> FracElement:
    """Coerce ints, Fractions and fraction-field elements into the coordinate field."""
    if isinstance(value, FracElement):
        if value.field == target:
            return value
        return target.from_expr(value.as_expr())
    if isinstance(value, bool):
        raise InvalidScalarError("Booleans are not scalars")
    if isinstance(value, int):
        return target(value)
    if isinstance(value, Fraction):
        return target(QQ(value.numerator, value.denominator))
    raise InvalidScalarError(f"Cannot interpret {value!r} as an extended scalar")


class ExtendedScalar:
    """
    a + b i + c s + e i s with coordinates in a fraction field containing q.

    Instances are immutable. Arithmetic between scalars with different sigma
    (generic q, q=1, parameter field) is refused.

    Args:
        coords: The four coordinates (1, i, s, i s)
        sigma: The value of s^2; selects the coordinate field
    """

    __slots__ = ("coords", "sigma")

    def __init__(self, coords: Tuple[Any, Any, Any, Any], sigma: FracElement = SIGMA):
        if len(coords) != 4:
            raise InvalidScalarError(f"An extended scalar has four coordinates, got {len(coords)}")
        self.sigma = sigma
        self.coords = tuple(_lift(c, sigma.field) for c in coords)

    @classmethod
    def lift(cls, value: Any, sigma: FracElement = SIGMA) -> "ExtendedScalar":
        """Embed a base-field element (or int/Fraction)."""
        if isinstance(value, ExtendedScalar):
            return value
        zero = sigma.field.zero
        return cls((value, zero, zero, zero), sigma)

    @classmethod
    def one(cls, sigma: FracElement = SIGMA) -> "ExtendedScalar":
        return cls.lift(1, sigma)

    @classmethod
    def zero(cls, sigma: FracElement = SIGMA) -> "ExtendedScalar":
        return cls.lift(0, sigma)

    @classmethod
    def imaginary_unit(cls, sigma: FracElement = SIGMA) -> "ExtendedScalar":
        return cls((0, 1, 0, 0), sigma)

    @classmethod
    def root(cls, sigma: FracElement = SIGMA) -> "ExtendedScalar":
        """The adjoined square root s of sigma."""
        return cls((0, 0, 1, 0), sigma)

    @property
    def field(self):
        return self.sigma.field

    def _coerce(self, other: Any) -> "ExtendedScalar":
        if isinstance(other, ExtendedScalar):
            if other.sigma != self.sigma:
                raise InvalidScalarError("Cannot combine extended scalars over different fields")
            return other
        return ExtendedScalar.lift(other, self.sigma)

    def is_rational(self) -> bool:
        """Whether the scalar lies in the coordinate field itself."""
        return not any(self.coords[1:])

    def rational_part(self) -> FracElement:
        """
        The scalar as a base-field element.

        Raises:
            InvalidScalarError: If the i, s or i s coordinate is nonzero
        """
        if not self.is_rational():
            raise InvalidScalarError(f"{self} does not lie in the base field")
        return self.coords[0]

    def __add__(self, other: Any) -> "ExtendedScalar":
        other = self._coerce(other)
        return ExtendedScalar(tuple(a + b for a, b in zip(self.coords, other.coords)), self.sigma)

    __radd__ = __add__

    def __neg__(self) -> "ExtendedScalar":
        return ExtendedScalar(tuple(-a for a in self.coords), self.sigma)

    def __sub__(self, other: Any) -> "ExtendedScalar":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "ExtendedScalar":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "ExtendedScalar":
        other = self._coerce(other)
        # (A1 + B1 s)(A2 + B2 s) with A, B in K(i)
        a1, b1, c1, e1 = self.coords
        a2, b2, c2, e2 = other.coords
        sigma = self.sigma
        return ExtendedScalar(
            (
                a1 * a2 - b1 * b2 + sigma * (c1 * c2 - e1 * e2),
                a1 * b2 + b1 * a2 + sigma * (c1 * e2 + e1 * c2),
                a1 * c2 - b1 * e2 + c1 * a2 - e1 * b2,
                a1 * e2 + b1 * c2 + c1 * b2 + e1 * a2,
            ),
            sigma,
        )

    __rmul__ = __mul__

    def inverse(self) -> "ExtendedScalar":
        """
        Multiplicative inverse via the two conjugations s -> -s and i -> -i.

        Raises:
            InvalidScalarError: If the scalar is zero
        """
        if not self:
            raise InvalidScalarError("Division by zero")
        a, b, c, e = self.coords
        conjugate = ExtendedScalar((a, b, -c, -e), self.sigma)
        # Norm down to K(i): A^2 - sigma B^2 with A = a + b i, B = c + e i
        norm = self * conjugate
        x, y = norm.coords[0], norm.coords[1]
        modulus = x * x + y * y
        norm_inverse = ExtendedScalar((x / modulus, -y / modulus, 0, 0), self.sigma)
        return conjugate * norm_inverse

    def __truediv__(self, other: Any) -> "ExtendedScalar":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Any) -> "ExtendedScalar":
        return self._coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "ExtendedScalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ExtendedScalar.one(self.sigma)
        for _ in range(exponent):
            result = result * self
        return result

    def __bool__(self) -> bool:
        return any(self.coords)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExtendedScalar):
            return self.sigma == other.sigma and self.coords == other.coords
        if isinstance(other, (int, Fraction, FracElement)):
            try:
                return self == self._coerce(other)
            except InvalidScalarError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.coords, self.sigma))

    def specialize_at_one(self) -> "ExtendedScalar":
        """
        Set q=1 in every coordinate; s^2 becomes 1/2.

        Raises:
            NotInKError: If a coordinate has a pole at q=1
            InvalidScalarError: If the coordinates are not in Q(q)
        """
        if self.sigma != SIGMA:
            raise InvalidScalarError("Only scalars over Q(q) at generic q can be specialized")
        return ExtendedScalar(
            tuple(scalar_from_fraction(specialize_at_one(c)) for c in self.coords), SIGMA_AT_ONE
        )

    def _coordinate_text(self, value: FracElement) -> str:
        if value.field == FIELD:
            return format_scalar(value)
        return str(value.as_expr()).replace("**", "^")

    def to_dict(self) -> Dict[str, str]:
        return {name: self._coordinate_text(c) for name, c in zip(BASIS, self.coords) if c}

    def __str__(self) -> str:
        pieces = []
        for name, value in zip(BASIS, self.coords):
            if not value:
                continue
            text = self._coordinate_text(value)
            if name == "1":
                pieces.append(text)
            elif text == "1":
                pieces.append(name)
            elif text == "-1":
                pieces.append(f"-{name}")
            else:
                pieces.append(f"({text})*{name}")
        if not pieces:
            return "0"
        if len(pieces) == 1:
            return pieces[0]
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"ExtendedScalar({self})"
