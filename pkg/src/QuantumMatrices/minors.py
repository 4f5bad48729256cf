"""
Quantum minors, the quantum determinant and the coinvariants tau_d.
"""

from itertools import combinations, permutations
from typing import Iterable, List, Sequence, Tuple

from src.FreeAlgebra import AlgebraPresentation, GeneratorId, NcPolynomial
from src.Models.errors import InvalidParameterError


def _inversions(values: Sequence[int]) -> int:
    return sum(1 for a, b in combinations(values, 2) if a > b)


def _index_set(indices: Iterable[int], n: int, name: str) -> Tuple[int, ...]:
    result = tuple(sorted(set(indices)))
    if not result:
        raise InvalidParameterError(f"Index set {name} is empty")
    if result[0] < 1 or result[-1] > n:
        raise InvalidParameterError(f"Index set {name}={list(result)} leaves 1..{n}")
    return result


def matrix_family(a: AlgebraPresentation) -> str:
    """Family tag of the matrix generators of a presentation (x, t or l)."""
    return a.generators[0].family


def quantum_minor(rows: Iterable[int], cols: Iterable[int], a: AlgebraPresentation) -> NcPolynomial:
    """
    Quantum minor det_q(I, J).

    Sum over bijections sigma: I -> J of (-q)^{inversions(sigma)} times the
    product of x[i, sigma(i)] with row indices increasing left to right.

    Args:
        rows: Row index set I
        cols: Column index set J, with |J| = |I|
        a: F_q(M) or F_q(G) presentation

    Returns:
        The minor in normal form

    Raises:
        InvalidParameterError: If the index sets differ in size or leave 1..n
    """
    row_set = _index_set(rows, a.n, "I")
    col_set = _index_set(cols, a.n, "J")
    if len(row_set) != len(col_set):
        raise InvalidParameterError(f"Minor index sets differ in size: {list(row_set)} vs {list(col_set)}")

    family = matrix_family(a)
    minus_q = -a.q_value
    terms = {}
    for image in permutations(col_set):
        word = tuple(GeneratorId(family, i, j) for i, j in zip(row_set, image))
        terms[word] = minus_q ** _inversions(image)
    return a.normal_form(NcPolynomial(terms))


def quantum_determinant(a: AlgebraPresentation) -> NcPolynomial:
    full = range(1, a.n + 1)
    return quantum_minor(full, full, a)


def principal_subsets(n: int, d: int) -> List[Tuple[int, ...]]:
    return list(combinations(range(1, n + 1), d))


def tau(d: int, a: AlgebraPresentation) -> NcPolynomial:
    """
    The coinvariant tau_d = sum over d-subsets I of q^{d(n+1) - 2 sum(I)} det_q(I, I).

    tau_1 is the quantum trace and tau_n the quantum determinant.

    Raises:
        InvalidParameterError: If d is outside 1..n
    """
    if not isinstance(d, int) or not 1 <= d <= a.n:
        raise InvalidParameterError(f"tau_d needs 1 <= d <= {a.n}, got {d!r}")
    total = NcPolynomial.zero()
    for subset in principal_subsets(a.n, d):
        exponent = d * (a.n + 1) - 2 * sum(subset)
        weight = a.q_value ** exponent if exponent >= 0 else 1 / a.q_value ** (-exponent)
        total = total + quantum_minor(subset, subset, a).scale(weight)
    return a.normal_form(total)
