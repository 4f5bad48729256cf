"""
Constant solutions of the reflection equation.

A constant matrix B defines a character of L_q(M) exactly when
R-hat (1 x B) R-hat (1 x B) = (1 x B) R-hat (1 x B) R-hat on the square of the
space. Residuals are kept in full: for a parametric family they cut out the
solution locus.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import Symbol, factor
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.rings import ring

from src.Models.errors import InvalidParameterError, InvalidScalarError
from src.Models.report import CheckReport, CheckResult
from src.Models.xi_spec import XiSpec
from src.RMatrix import TensorOperator, build_r_hat
from src.Scalars import FIELD, Q_SYMBOL, format_scalar, to_scalar

logger = logging.getLogger(__name__)

_TRANSFORMATIONS = standard_transformations + (convert_xor,)


def _square(matrix: Sequence[Sequence[Any]]) -> int:
    n = len(matrix)
    if n < 1 or any(len(row) != n for row in matrix):
        raise InvalidParameterError("Candidate matrix must be square and non-empty")
    return n


def _second_slot(matrix: Sequence[Sequence[Any]], n: int) -> TensorOperator:
    """1 x B, with entry B[a][b] at ((k,a),(k,b))."""
    entries = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            value = matrix[a - 1][b - 1]
            if value:
                for k in range(1, n + 1):
                    entries[((k, a), (k, b))] = value
    return TensorOperator(n, 2, entries)


def re_residual(matrix: Sequence[Sequence[Any]], r_hat: TensorOperator) -> TensorOperator:
    """R-hat B2 R-hat B2 - B2 R-hat B2 R-hat for entries of any commutative ring containing R-hat's."""
    b2 = _second_slot(matrix, r_hat.n)
    return r_hat.compose(b2).compose(r_hat).compose(b2) - b2.compose(r_hat).compose(b2).compose(r_hat)


def is_re_solution(matrix: Sequence[Sequence[Any]], at_one: bool = False) -> Tuple[bool, TensorOperator]:
    """
    Exact reflection equation check for a constant matrix.

    Args:
        matrix: n x n matrix of scalars (ints, Fractions or scalar text)
        at_one: Check the q=1 specialization of the equation instead

    Returns:
        (solution, residual operator)

    Raises:
        InvalidParameterError: If the matrix is not square
        InvalidScalarError: If an entry is not a scalar (e.g. has free parameters)
    """
    n = _square(matrix)
    values = [[to_scalar(v) for v in row] for row in matrix]
    residual = re_residual(values, build_r_hat(n, at_one))
    if not residual.is_zero():
        logger.debug(f"Matrix {[[format_scalar(v) for v in row] for row in values]} is not an RE solution")
    return residual.is_zero(), residual


@dataclass(frozen=True)
class FamilyResidual:
    """One nonzero entry of the reflection equation residual of a parametric family."""

    row: Tuple[int, int]
    col: Tuple[int, int]
    value: Any

    def factored(self) -> str:
        return str(factor(self.value.as_expr()))

    def to_dict(self) -> Dict[str, Any]:
        return {"i": self.row[0], "s": self.row[1], "j": self.col[0], "t": self.col[1], "residual": self.factored()}


def _parameters(matrix: Sequence[Sequence[Any]]) -> Tuple[List[List[Any]], List[str]]:
    """Parse entries to sympy expressions and collect parameter names other than q."""
    expressions = []
    names = set()
    for row in matrix:
        parsed = []
        for value in row:
            if isinstance(value, str):
                try:
                    expr = parse_expr(value, local_dict={"q": Q_SYMBOL}, transformations=_TRANSFORMATIONS)
                except Exception as e:
                    raise InvalidScalarError(f"Cannot parse matrix entry {value!r}: {e}") from e
                names.update(str(s) for s in expr.free_symbols if s != Q_SYMBOL)
                parsed.append(expr)
            else:
                parsed.append(value)
        expressions.append(parsed)
    return expressions, sorted(names)


def scan_family(matrix: Sequence[Sequence[Any]], n: Optional[int] = None) -> List[FamilyResidual]:
    """
    Reflection equation residuals of a matrix whose entries are polynomials in parameters.

    Entries are scalars or text such as ``"a"``, ``"q*b + 1"``. Every symbol
    other than q is a parameter; the residuals are exact polynomials in the
    parameters over Q(q).

    Args:
        matrix: n x n candidate family
        n: Expected size (checked when given)

    Returns:
        Nonzero residual entries in (row, column) order; empty means every
        member of the family is a solution

    Raises:
        InvalidParameterError: If the matrix is not n x n
    """
    size = _square(matrix)
    if n is not None and n != size:
        raise InvalidParameterError(f"Family is {size}x{size}, expected n={n}")
    expressions, names = _parameters(matrix)

    if names:
        params_ring, *_ = ring(names, FIELD.to_domain())
        local_dict = {name: Symbol(name) for name in names}
        local_dict["q"] = Q_SYMBOL

        def convert(value: Any) -> Any:
            if isinstance(value, int):
                return params_ring(value)
            try:
                return params_ring.from_expr(value)
            except Exception as e:
                raise InvalidScalarError(f"Entry {value} is not a polynomial in {', '.join(names)}") from e

        entries = [[convert(v) for v in row] for row in expressions]
        r_hat = build_r_hat(size).map(params_ring)
    else:
        entries = [[to_scalar(v) for v in row] for row in expressions]
        r_hat = build_r_hat(size)

    residual = re_residual(entries, r_hat)
    result = [FamilyResidual(row, col, value) for (row, col), value in residual.sorted_items()]
    logger.info(f"Family scan n={size}, parameters {names or 'none'}: {len(result)} nonzero residual entries")
    return result


def jordan_obstruction_sweep(eigenvalues: Sequence[Any] = (1, 2, 3)) -> CheckReport:
    """
    Jordan types in n = 3 whose Jordan matrix cannot be an RE solution.

    Covers the nilpotent block of size three, a size-two block next to a
    nonzero eigenvalue, and three distinct nonzero eigenvalues; each result
    passes when the residual is nonzero. The identity is included as a
    control that must be a solution.
    """
    if len(eigenvalues) != 3:
        raise InvalidParameterError("The sweep needs three distinct nonzero eigenvalues")
    cases = [
        ("J3", XiSpec(3, 3, [])),
        ("diag(J2, lambda)", XiSpec(3, 2, [eigenvalues[0]])),
        ("diag(lambda1, lambda2, lambda3)", XiSpec(3, 0, list(eigenvalues))),
    ]
    report = CheckReport("re-obstructions n=3", details={"cases": {}})
    for name, xi in cases:
        solution, residual = is_re_solution(xi.jordan_matrix())
        report.details["cases"][name] = {"xi": xi.to_dict(), "solution": solution, "residual_entries": len(residual)}
        report.add(
            CheckResult.from_residual(
                f"J({name}) is not a reflection equation solution",
                "solves the reflection equation" if solution else 0,
            )
        )

    identity_ok, residual = is_re_solution([[1 if i == j else 0 for j in range(3)] for i in range(3)])
    report.add(CheckResult.from_residual("the identity is a reflection equation solution", residual.to_json() if not identity_ok else 0))
    return report
