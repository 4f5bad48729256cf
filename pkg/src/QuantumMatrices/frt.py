"""
The FRT bialgebra F_q(M) of quantum n x n matrices.

Relations are the entries of R-hat (X x 1)(1 x X) - (X x 1)(1 x X) R-hat,
oriented under the row-major degree-lexicographic order.
"""

import logging
from functools import lru_cache
from typing import List

from src.FreeAlgebra import (
    AlgebraPresentation,
    GeneratorId,
    MonomialOrder,
    NcPolynomial,
    matrix_generators,
    matrix_weights,
)
from src.Models.errors import InvalidParameterError
from src.RMatrix import TensorOperator, build_r_hat

logger = logging.getLogger(__name__)


def generator_operator(family: str, n: int, slot: int) -> TensorOperator:
    """
    The matrix of generators acting on one factor of the square of the space.

    slot=1 gives X x 1, with entry x[i,j] at ((i,s),(j,s)); slot=2 gives
    1 x X, with entry x[s,t] at ((i,s),(i,t)).
    """
    entries = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            g = NcPolynomial.generator(GeneratorId(family, a, b))
            for k in range(1, n + 1):
                if slot == 1:
                    entries[((a, k), (b, k))] = g
                else:
                    entries[((k, a), (k, b))] = g
    return TensorOperator(n, 2, entries)


def lifted_r_hat(n: int, at_one: bool = False) -> TensorOperator:
    """R-hat with its scalar entries lifted to constant polynomials."""
    return build_r_hat(n, at_one).map(NcPolynomial.constant)


def frt_relations(n: int, family: str = "x", at_one: bool = False) -> List[NcPolynomial]:
    """All n^4 entries of R-hat X1 X2 - X1 X2 R-hat (zero entries omitted)."""
    r_hat = lifted_r_hat(n, at_one)
    x1x2 = generator_operator(family, n, 1).compose(generator_operator(family, n, 2))
    difference = r_hat.compose(x1x2) - x1x2.compose(r_hat)
    return [value for _, value in difference.sorted_items()]


def frt_order(n: int, family: str = "x") -> MonomialOrder:
    """Row-major precedence: x[1,1] < x[1,2] < ... < x[n,n]."""
    return MonomialOrder(matrix_generators(family, n))


@lru_cache(maxsize=None)
def frt_presentation(n: int, at_one: bool = False) -> AlgebraPresentation:
    """
    Build F_q(M) for n x n matrices.

    Args:
        n: Matrix size, n >= 1
        at_one: Build the q=1 specialization (the commutative polynomial ring)

    Returns:
        Presentation over x[i,j] with its relations oriented and inter-reduced

    Raises:
        InvalidParameterError: If n < 1
        OrientationError: If the relations cannot be oriented
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidParameterError(f"n must be a positive integer, got {n!r}")
    generators = matrix_generators("x", n)
    presentation = AlgebraPresentation.from_relations(
        "frt",
        n,
        generators,
        frt_relations(n, "x", at_one),
        frt_order(n, "x"),
        matrix_weights(generators, n),
        at_one=at_one,
    )
    logger.info(f"Built F_q(M) for n={n}{' at q=1' if at_one else ''}: {len(presentation.rules)} rules")
    return presentation
