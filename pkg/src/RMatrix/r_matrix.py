"""
The standard R-matrix of the n-dimensional representation and its braided form.

R^{is}_{jt} is q when i=j=s=t, 1 when i=j and s=t differ, q-q^-1 when
i>j, i=t and j=s, and zero otherwise. R-hat is the flip composed with R,
so R-hat^{is}_{jt} = R^{si}_{jt}.
"""

import logging
from functools import lru_cache
from typing import Any, Tuple

from src.Models.errors import InvalidParameterError
from src.RMatrix.tensor_operator import TensorOperator
from src.Scalars import FIELD, Q, specialize_at_one, scalar_from_fraction

logger = logging.getLogger(__name__)


def _check_size(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidParameterError(f"n must be a positive integer, got {n!r}")


def _r_entries(n: int, q: Any) -> dict:
    one = FIELD.one
    entries = {}
    for i in range(1, n + 1):
        entries[((i, i), (i, i))] = q
        for s in range(1, n + 1):
            if s != i:
                entries[((i, s), (i, s))] = one
        for j in range(1, i):
            # i > j, t = i, s = j
            entries[((i, j), (j, i))] = q - 1 / q
    return entries


@lru_cache(maxsize=None)
def build_r(n: int, at_one: bool = False) -> TensorOperator:
    """
    Build R on the square of the n-dimensional space.

    Args:
        n: Dimension, n >= 1
        at_one: Build the q=1 specialization (the identity)

    Raises:
        InvalidParameterError: If n < 1
    """
    _check_size(n)
    operator = TensorOperator(n, 2, _r_entries(n, FIELD.one if at_one else Q))
    logger.debug(f"Built R for n={n}{' at q=1' if at_one else ''}: {len(operator)} nonzero entries")
    return operator


@lru_cache(maxsize=None)
def build_r_hat(n: int, at_one: bool = False) -> TensorOperator:
    """
    Build R-hat = flip o R, so that R-hat^{is}_{jt} = R^{si}_{jt}.

    Raises:
        InvalidParameterError: If n < 1
    """
    r = build_r(n, at_one)
    return TensorOperator(n, 2, {((s, i), col): value for ((i, s), col), value in r.items()})


def flip(n: int) -> TensorOperator:
    return TensorOperator(n, 2, {((s, i), (i, s)): FIELD.one for i, s in TensorOperator.basis(n, 2)})


def check_hecke(n: int) -> Tuple[bool, TensorOperator]:
    """
    Check the Hecke relation (R-hat - q)(R-hat + q^-1) = 0.

    Returns:
        Whether it holds, and the residual operator
    """
    r_hat = build_r_hat(n)
    identity = TensorOperator.identity(n, 2)
    residual = (r_hat - identity.scale(Q)).compose(r_hat + identity.scale(1 / Q))
    if not residual.is_zero():
        logger.warning(f"Hecke relation fails for n={n}: {len(residual)} nonzero residual entries")
    return residual.is_zero(), residual


def check_braid(n: int) -> Tuple[bool, TensorOperator]:
    """
    Check the braid relation on the cube of the space:
    (R-hat x 1)(1 x R-hat)(R-hat x 1) = (1 x R-hat)(R-hat x 1)(1 x R-hat).

    Returns:
        Whether it holds, and the residual operator
    """
    r_hat = build_r_hat(n)
    identity = TensorOperator.identity(n, 1)
    r12 = r_hat.kron(identity)
    r23 = identity.kron(r_hat)
    residual = r12.compose(r23).compose(r12) - r23.compose(r12).compose(r23)
    if not residual.is_zero():
        logger.warning(f"Braid relation fails for n={n}: {len(residual)} nonzero residual entries")
    return residual.is_zero(), residual


def specialize_operator(operator: TensorOperator) -> TensorOperator:
    """Entrywise q=1 specialization of a scalar operator."""
    return operator.map(lambda value: scalar_from_fraction(specialize_at_one(value)))
