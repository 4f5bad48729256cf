"""
Exception types shared by every package.

Each error kind maps to a ValueError subclass so callers that only care about
"bad input" can catch ValueError, while the CLI can still tell verification
problems apart from usage problems.
"""

from typing import Any, Optional


class InvalidScalarError(ValueError):
    """Raised for zero denominators, division by zero or unparsable scalar text."""


class NotInKError(ValueError):
    """Raised when a scalar has a pole at q=1 and so lies outside the base ring."""


class InvalidParameterError(ValueError):
    """Raised for out-of-range sizes, degrees and mismatched index sets."""


class InvalidXiSpecError(ValueError):
    """Raised when a Jordan-type specification is not in the admissible set."""


class PolynomialParseError(ValueError):
    """Raised when polynomial text or JSON cannot be read."""


class OrientationError(ValueError):
    """
    Raised when a relation cannot be turned into a rewrite rule.

    Attributes:
        element: The offending polynomial, if one is available
    """

    def __init__(self, message: str, element: Optional[Any] = None):
        super().__init__(message)
        self.element = element


class RelationViolationError(ValueError):
    """
    Raised when a matrix does not define a character of a presented algebra.

    Attributes:
        relation: Text of the first defining relation that does not vanish
    """

    def __init__(self, message: str, relation: Optional[str] = None):
        super().__init__(message)
        self.relation = relation
