"""
Hilbert functions, weight tables, ideal membership and the classical q=1 oracle.

Dimensions are read off the filtered algebra: the degree-d component of the
quotient has (irreducible words of degree d) minus (rank gained by the
ideal span at stage d) dimensions, and the same count per weight gives the
weight tables.
"""

import logging
from collections import Counter
from typing import List, Optional, Tuple

from src.BraidedMatrices import rea_presentation
from src.FreeAlgebra import AlgebraPresentation, NcPolynomial, TruncatedIdealSpan
from src.Models.errors import InvalidParameterError
from src.Models.report import CheckReport, CheckResult
from src.Models.tables import HilbertTable, WeightTable
from src.QuantumMatrices import frt_presentation
from src.QuantumSL import sl_presentation
from src.Quotients.quotient import CentralQuotient
from src.Scalars import scalar_from_fraction, specialize_at_one

logger = logging.getLogger(__name__)

_CLASSICAL_BUILDERS = {
    "rea": rea_presentation,
    "frt": frt_presentation,
    "sl": sl_presentation,
}


def _check_degree(d: int, name: str = "D") -> None:
    if not isinstance(d, int) or d < 0:
        raise InvalidParameterError(f"{name} must be a non-negative integer, got {d!r}")


def hilbert(qt: CentralQuotient, D: int) -> HilbertTable:
    """
    Dimensions of the degree components 0..D of the quotient.

    Raises:
        InvalidParameterError: If D < 0
    """
    _check_degree(D)
    a = qt.base
    span = qt.span().extend_to(D)
    dims = []
    for d in range(D + 1):
        dims.append(a.irreducible_word_count(d) - span.rank_increment(d))
        logger.info(f"{qt.label}: degree {d}, dimension {dims[-1]}")
    return HilbertTable(dims, label=qt.label)


def weight_table(qt: CentralQuotient, d: int) -> WeightTable:
    """
    Weight multiplicities of the degree-d component of the quotient.

    Raises:
        InvalidParameterError: If d < 0
    """
    _check_degree(d, "d")
    a = qt.base
    span = qt.span().extend_to(d)
    counts = Counter(a.weight_of(word) for word in a.irreducible_words(d))
    for weight, rank in span.rank_increments_by_weight(d).items():
        counts[weight] -= rank
    return WeightTable(d, dict(counts), label=qt.label)


def classical_quotient(qt: CentralQuotient) -> CentralQuotient:
    """
    The same quotient at q=1: coefficients and constants are specialized and
    the elements are re-reduced in the q=1 presentation.

    Raises:
        NotInKError: If a coefficient or constant has a pole at q=1
    """
    if qt.base.at_one:
        return qt
    builder = _CLASSICAL_BUILDERS.get(qt.base.name)
    if builder is None:
        raise InvalidParameterError(f"No q=1 presentation for algebra {qt.base.name!r}")
    classical = builder(qt.n, at_one=True)

    def specialize(value):
        return scalar_from_fraction(specialize_at_one(value))

    generators = [
        (classical.normal_form(element.map_coefficients(specialize)), specialize(constant))
        for element, constant in qt.generators
    ]
    return CentralQuotient(classical, generators, label=f"{qt.label} at q=1", verify=False)


def classical_oracle(qt: CentralQuotient, D: int) -> Tuple[HilbertTable, List[WeightTable]]:
    """
    Hilbert table and per-degree weight tables of the q=1 quotient.

    Returns:
        (HilbertTable for degrees 0..D, [WeightTable for d in 0..D])

    Raises:
        NotInKError: If a scalar of the quotient has a pole at q=1
    """
    _check_degree(D)
    classical = classical_quotient(qt)
    return hilbert(classical, D), [weight_table(classical, d) for d in range(D + 1)]


def member(p: NcPolynomial, qt: CentralQuotient, cap: int) -> bool:
    """
    Whether p lies in the degree-cap span of the ideal.

    Raises:
        InvalidParameterError: If deg p exceeds the cap
    """
    _check_degree(cap, "cap")
    if p.degree() > cap:
        raise InvalidParameterError(f"Degree of the element ({p.degree()}) exceeds the cap {cap}")
    return qt.span_at(cap).contains(p)


def _spans_agree(first: TruncatedIdealSpan, second: TruncatedIdealSpan, d: int) -> bool:
    if first.ranks_by_weight(d) != second.ranks_by_weight(d):
        return False
    return all(second.contains(row) for row in first.rows())


def check_two_sided(qt: CentralQuotient, cap: int = 3) -> CheckReport:
    """Compare the left and right ideal spans stage by stage up to ``cap``."""
    _check_degree(cap, "cap")
    # Local spans: the rows compared must belong to stage d
    right = TruncatedIdealSpan(qt.base, qt.ideal_generators(), "right")
    left = TruncatedIdealSpan(qt.base, qt.ideal_generators(), "left")
    report = CheckReport(f"two-sided {qt.label}", details={"cap": cap})
    for d in range(cap + 1):
        right.extend_to(d)
        left.extend_to(d)
        agree = _spans_agree(right, left, d)
        report.add(
            CheckResult.from_residual(
                f"left span = right span up to degree {d}",
                0 if agree else f"ranks {left.rank(d)} (left) vs {right.rank(d)} (right)",
            )
        )
    if not report.passed:
        logger.warning(f"{qt.label}: left and right ideal spans differ")
    return report


def compare_with_oracle(qt: CentralQuotient, D: int, weight_degree: Optional[int] = None) -> CheckReport:
    """
    Put the quantum and classical tables side by side.

    Args:
        qt: The quotient
        D: Hilbert table degree cap
        weight_degree: Compare weight tables for d <= weight_degree (default D)
    """
    _check_degree(D)
    weight_degree = D if weight_degree is None else weight_degree
    quantum = hilbert(qt, D)
    classical, classical_weights = classical_oracle(qt, max(D, weight_degree))
    classical = HilbertTable(classical.dims[: D + 1], label=classical.label)

    report = CheckReport(
        f"flatness {qt.label}",
        details={"quantum": quantum.to_dict(), "classical": classical.to_dict(), "weights": []},
    )
    report.add(
        CheckResult.from_residual(
            f"hilbert = classical oracle up to degree {D}",
            0 if quantum == classical else f"{quantum.dims} vs {classical.dims}",
        )
    )
    for d in range(weight_degree + 1):
        ours = weight_table(qt, d)
        theirs = classical_weights[d]
        report.details["weights"].append({"quantum": ours.to_dict(), "classical": theirs.to_dict()})
        report.add(
            CheckResult.from_residual(
                f"weight table = classical oracle in degree {d}",
                0 if ours.multiplicities == theirs.multiplicities else f"{ours.multiplicities} vs {theirs.multiplicities}",
            )
        )
    if not report.passed:
        logger.warning(f"{qt.label}: quantum and classical tables differ")
    return report
