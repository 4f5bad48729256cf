"""
The reflection equation algebra L_q(M) of braided matrices.

Relations are the entries of R-hat (1 x L) R-hat (1 x L) - (1 x L) R-hat (1 x L) R-hat.
For n=2 the precedence l[2,2] < l[1,1] < l[1,2] < l[2,1] orients them into a
confluent system. For larger n a few precedence heuristics are tried and
the first whose degree-3 overlaps all resolve is kept; if none does, the
first candidate is completed up to the configured degree cap.
"""

import logging
from functools import lru_cache
from typing import List, Optional, Sequence

from src.FreeAlgebra import (
    AlgebraPresentation,
    GeneratorId,
    MonomialOrder,
    NcPolynomial,
    complete,
    matrix_generators,
    matrix_weights,
)
from src.Models.errors import InvalidParameterError, OrientationError
from src.QuantumMatrices import generator_operator, lifted_r_hat

logger = logging.getLogger(__name__)


def rea_relations(n: int, at_one: bool = False) -> List[NcPolynomial]:
    """All n^4 entries of the reflection equation (zero entries omitted)."""
    r_hat = lifted_r_hat(n, at_one)
    l2 = generator_operator("l", n, 2)
    left = r_hat.compose(l2).compose(r_hat).compose(l2)
    right = l2.compose(r_hat).compose(l2).compose(r_hat)
    return [value for _, value in (left - right).sorted_items()]


def precedence_candidates(n: int) -> List[List[GeneratorId]]:
    """Generator precedences to try, smallest generator first."""

    def l(i: int, j: int) -> GeneratorId:
        return GeneratorId("l", i, j)

    rows = range(1, n + 1)
    diagonal_descending = [l(i, i) for i in reversed(rows)]
    upper = [l(i, j) for i in rows for j in rows if i < j]
    lower = [l(i, j) for i in rows for j in rows if i > j]
    candidates = [
        diagonal_descending + upper + lower,
        [l(i, j) for i in reversed(rows) for j in rows],
        [l(i, j) for i in reversed(rows) for j in reversed(rows)],
        diagonal_descending + lower + upper,
    ]
    unique: List[List[GeneratorId]] = []
    for candidate in candidates:
        if candidate not in unique:
            unique.append(candidate)
    return unique


def _oriented(n: int, precedence: Sequence[GeneratorId], relations: List[NcPolynomial], at_one: bool) -> AlgebraPresentation:
    generators = matrix_generators("l", n)
    return AlgebraPresentation.from_relations(
        "rea",
        n,
        generators,
        relations,
        MonomialOrder(precedence),
        matrix_weights(generators, n),
        at_one=at_one,
    )


@lru_cache(maxsize=None)
def rea_presentation(n: int, at_one: bool = False, degree_cap: Optional[int] = None) -> AlgebraPresentation:
    """
    Build L_q(M) for n x n braided matrices.

    Args:
        n: Matrix size, n >= 1
        at_one: Build the q=1 specialization (commutative polynomial ring)
        degree_cap: Completion cap for the fallback (default from QORBITS_COMPLETION_CAP)

    Returns:
        Presentation over l[i,j] whose overlaps resolve up to the cap

    Raises:
        InvalidParameterError: If n < 1
        OrientationError: If no precedence yields an orientable system
    """
    if not isinstance(n, int) or n < 1:
        raise InvalidParameterError(f"n must be a positive integer, got {n!r}")
    relations = rea_relations(n, at_one)
    candidates = precedence_candidates(n)

    for index, precedence in enumerate(candidates):
        try:
            presentation = _oriented(n, precedence, relations, at_one)
            _, report = complete(presentation, degree_cap=3)
        except OrientationError as e:
            logger.info(f"L_q(M), n={n}: precedence candidate {index} cannot be oriented: {e}")
            continue
        if report.confluent_as_given:
            logger.info(f"L_q(M), n={n}: precedence candidate {index} accepted, {len(presentation.rules)} rules")
            return presentation
        logger.info(f"L_q(M), n={n}: precedence candidate {index} needs {len(report.added_rules)} extra rules")

    try:
        presentation = _oriented(n, candidates[0], relations, at_one)
        completed, report = complete(presentation, degree_cap)
    except OrientationError as e:
        logger.error(f"L_q(M), n={n}: no precedence candidate can be oriented", exc_info=True)
        raise OrientationError(f"Cannot orient the reflection equation relations for n={n}: {e}", element=e.element) from e
    logger.info(f"L_q(M), n={n}: completed first candidate, {len(report.added_rules)} rules added")
    return completed
