"""
Exact coefficient arithmetic in Q(q) with specialization at q=1.
"""

from .scalars import (
    FIELD,
    Q,
    Q_SYMBOL,
    LaurentPolynomial,
    RationalScalar,
    field_ops,
    format_scalar,
    from_sympy,
    inverse,
    is_regular_at_one,
    laurent_parts,
    normalize,
    parse_scalar,
    q_power,
    scalar_from_fraction,
    specialize_at_one,
    to_scalar,
)

__all__ = [
    "FIELD",
    "Q",
    "Q_SYMBOL",
    "LaurentPolynomial",
    "RationalScalar",
    "field_ops",
    "format_scalar",
    "from_sympy",
    "inverse",
    "is_regular_at_one",
    "laurent_parts",
    "normalize",
    "parse_scalar",
    "q_power",
    "scalar_from_fraction",
    "specialize_at_one",
    "to_scalar",
]
