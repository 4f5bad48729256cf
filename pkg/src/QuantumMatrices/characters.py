"""
Evaluation characters: algebra maps sending the matrix of generators to a
constant matrix.

A matrix B defines a character of a presented algebra exactly when every
defining relation vanishes at B. The check runs when a Character is built,
so an evaluation never silently uses an ill-defined map.
"""

import logging
from typing import Any, List, Optional, Sequence

from src.FreeAlgebra import AlgebraPresentation, NcPolynomial
from src.Models.errors import InvalidParameterError, RelationViolationError
from src.Models.xi_spec import XiSpec
from src.QuantumMatrices.frt import frt_presentation
from src.QuantumMatrices.minors import tau
from src.Scalars import RationalScalar, to_scalar


class Character:
    """
    The character X -> B of a matrix algebra.

    Args:
        presentation: F_q(M) (or another matrix presentation)
        matrix: n x n constant matrix; entries are scalars, ints or scalar text

    Raises:
        InvalidParameterError: If the matrix is not n x n
        RelationViolationError: If some defining relation does not vanish at B
    """

    def __init__(self, presentation: AlgebraPresentation, matrix: Sequence[Sequence[Any]]):
        self.logger = logging.getLogger(__name__)
        n = presentation.n
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise InvalidParameterError(f"Character matrix must be {n}x{n}")
        self.presentation = presentation
        self.matrix: List[List[RationalScalar]] = [[to_scalar(v) for v in row] for row in matrix]
        self._check_relations()

    def _check_relations(self) -> None:
        for relation in self.presentation.relations():
            value = self.evaluate(relation)
            if value:
                text = self.presentation.format(relation)
                self.logger.warning(f"Matrix violates relation {text} = 0 (value {value})")
                raise RelationViolationError(
                    f"Matrix does not define a character: relation {text} evaluates to {value}",
                    relation=text,
                )

    def evaluate(self, p: NcPolynomial) -> RationalScalar:
        """Image of p under the substitution x[i,j] -> B[i][j]."""
        total = self.presentation.one - self.presentation.one
        for word, coefficient in p.items():
            value = coefficient
            for g in word:
                value = value * self.matrix[g.row - 1][g.col - 1]
                if not value:
                    break
            total = total + value
        return total


def evaluate_character(
    p: NcPolynomial, matrix: Sequence[Sequence[Any]], a: Optional[AlgebraPresentation] = None
) -> RationalScalar:
    """
    Evaluate p at a constant matrix, after checking the matrix defines a character.

    Args:
        p: Element of F_q(M)
        matrix: Constant n x n matrix
        a: Presentation (default F_q(M) of matching size)

    Raises:
        RelationViolationError: If the matrix admits no character
    """
    presentation = a or frt_presentation(len(matrix))
    return Character(presentation, matrix).evaluate(p)


def tau_at_xi(d: int, xi: XiSpec) -> RationalScalar:
    """tau_d evaluated at the Jordan matrix J(xi)."""
    a = frt_presentation(xi.n)
    return Character(a, xi.jordan_matrix()).evaluate(tau(d, a))
