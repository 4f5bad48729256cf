"""
Matrices whose entries are elements of a presented algebra, and quantum traces.
"""

from typing import List, Optional

from src.FreeAlgebra import AlgebraPresentation, GeneratorId, NcPolynomial
from src.Models.errors import InvalidParameterError
from src.BraidedMatrices.rea import rea_presentation


def q_weight(exponent: int, q_value) -> object:
    if exponent >= 0:
        return q_value ** exponent
    return 1 / q_value ** (-exponent)


class MatrixOverAlgebra:
    """
    n x n matrix of normal-form polynomials in a presented algebra.

    Args:
        presentation: The algebra the entries live in
        entries: n x n nested list of polynomials; entries are normal-formed
    """

    def __init__(self, presentation: AlgebraPresentation, entries: List[List[NcPolynomial]]):
        n = presentation.n
        if len(entries) != n or any(len(row) != n for row in entries):
            raise InvalidParameterError(f"Matrix over {presentation.name} must be {n}x{n}")
        self.presentation = presentation
        self.n = n
        self.entries = [[presentation.normal_form(p) for p in row] for row in entries]

    @classmethod
    def generator_matrix(cls, presentation: AlgebraPresentation, family: Optional[str] = None) -> "MatrixOverAlgebra":
        """The matrix [g[i,j]] of matrix generators."""
        family = family or presentation.generators[0].family
        n = presentation.n
        return cls(
            presentation,
            [[presentation.generator(GeneratorId(family, i, j)) for j in range(1, n + 1)] for i in range(1, n + 1)],
        )

    @classmethod
    def identity(cls, presentation: AlgebraPresentation) -> "MatrixOverAlgebra":
        n = presentation.n
        one = NcPolynomial.constant(presentation.one)
        return cls(presentation, [[one if i == j else NcPolynomial.zero() for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> NcPolynomial:
        """Entry in row i, column j (1-based)."""
        return self.entries[i - 1][j - 1]

    def __mul__(self, other: "MatrixOverAlgebra") -> "MatrixOverAlgebra":
        a = self.presentation
        product = []
        for i in range(self.n):
            row = []
            for j in range(self.n):
                total = NcPolynomial.zero()
                for k in range(self.n):
                    total = total + self.entries[i][k] * other.entries[k][j]
                row.append(a.normal_form(total))
            product.append(row)
        return MatrixOverAlgebra(a, product)

    def power(self, k: int) -> "MatrixOverAlgebra":
        if k < 0:
            raise InvalidParameterError(f"Matrix power must be non-negative, got {k}")
        result = MatrixOverAlgebra.identity(self.presentation)
        for _ in range(k):
            result = result * self
        return result

    def quantum_trace(self) -> NcPolynomial:
        """Tr_q(M) = sum_i q^{n+1-2i} M[i,i]."""
        a = self.presentation
        total = NcPolynomial.zero()
        for i in range(1, self.n + 1):
            total = total + self.entry(i, i).scale(q_weight(self.n + 1 - 2 * i, a.q_value))
        return a.normal_form(total)

    def __repr__(self) -> str:
        return f"MatrixOverAlgebra({self.presentation.name}, n={self.n})"


def trace_power(k: int, n: int, a: Optional[AlgebraPresentation] = None) -> NcPolynomial:
    """
    Tr_q(L^k) in L_q(M).

    Args:
        k: Power, k >= 1
        n: Matrix size
        a: Presentation to compute in (default rea_presentation(n))

    Raises:
        InvalidParameterError: If k < 1
    """
    if not isinstance(k, int) or k < 1:
        raise InvalidParameterError(f"trace_power needs k >= 1, got {k!r}")
    presentation = a or rea_presentation(n)
    return MatrixOverAlgebra.generator_matrix(presentation).power(k).quantum_trace()
