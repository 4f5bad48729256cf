"""
Quotients of L_q(M) by ideals generated by central elements minus constants.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.BraidedMatrices import check_central, phi_tau1, phi_tau2, rea_presentation, trace_power
from src.FreeAlgebra import AlgebraPresentation, NcPolynomial, TruncatedIdealSpan
from src.Models.errors import InvalidParameterError, InvalidXiSpecError
from src.Models.xi_spec import XiSpec
from src.QuantumMatrices import tau_at_xi
from src.Scalars import format_scalar, is_regular_at_one, to_scalar


class CentralQuotient:
    """
    L_q(M) modulo the ideal generated by g_k - c_k for central g_k.

    The ideal spans are built lazily and extended on demand; they are the
    only state that changes after construction.

    Args:
        base: The reflection equation algebra (or its q=1 specialization)
        generators: (central element, constant) pairs
        label: Short description used in tables and logs
        verify: Check centrality of every element on construction

    Raises:
        InvalidParameterError: If an element is not central in the base
    """

    def __init__(
        self,
        base: AlgebraPresentation,
        generators: Sequence[Tuple[NcPolynomial, Any]],
        label: Optional[str] = None,
        verify: bool = True,
    ):
        self.logger = logging.getLogger(__name__)
        self.base = base
        self.label = label or f"{base.name} quotient n={base.n}"
        self.generators: List[Tuple[NcPolynomial, Any]] = []
        for element, constant in generators:
            element = base.normal_form(element)
            constant = base.one * to_scalar(constant)
            if verify:
                central, residuals = check_central(element, base.n, base)
                if not central:
                    first = next(iter(residuals.values()))
                    raise InvalidParameterError(
                        f"{base.format(element)} is not central in {base.name}: residual {base.format(first)}"
                    )
            if not base.at_one and not is_regular_at_one(constant):
                self.logger.warning(f"{self.label}: constant {format_scalar(constant)} has a pole at q=1")
            self.generators.append((element, constant))
        self._spans: Dict[str, TruncatedIdealSpan] = {}

    @property
    def n(self) -> int:
        return self.base.n

    def ideal_generators(self) -> List[NcPolynomial]:
        """The inhomogeneous elements g - c generating the ideal."""
        return [element - constant for element, constant in self.generators]

    def span(self, side: str = "right") -> TruncatedIdealSpan:
        """The (cached) degree-truncated ideal span on the given side."""
        if side not in self._spans:
            self._spans[side] = TruncatedIdealSpan(self.base, self.ideal_generators(), side)
        return self._spans[side]

    def span_at(self, cap: int, side: str = "right") -> TruncatedIdealSpan:
        """
        A span whose last stage is exactly ``cap``.

        Stages share their echelon blocks, so a cached span already built
        past the cap is replaced by a fresh one.
        """
        cached = self.span(side)
        if cached.degree <= cap:
            return cached.extend_to(cap)
        return TruncatedIdealSpan(self.base, self.ideal_generators(), side).extend_to(cap)

    def constants(self) -> List[Any]:
        return [constant for _, constant in self.generators]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "algebra": self.base.name,
            "n": self.n,
            "generators": [
                {"element": self.base.format(element), "constant": format_scalar(constant)}
                for element, constant in self.generators
            ],
        }

    def __repr__(self) -> str:
        return f"CentralQuotient({self.label!r}, {len(self.generators)} generators)"


def nilcone(n: int, at_one: bool = False) -> CentralQuotient:
    """
    The quantum nilpotent cone: L_q(M) modulo Tr_q(L^d), d = 1..n.

    Raises:
        InvalidParameterError: If n < 2
    """
    if not isinstance(n, int) or n < 2:
        raise InvalidParameterError(f"The nilpotent cone needs n >= 2, got {n!r}")
    a = rea_presentation(n, at_one)
    generators = [(trace_power(d, n, a), 0) for d in range(1, n + 1)]
    return CentralQuotient(a, generators, label=f"nilcone n={n}")


def nilcone_phi(n: int = 2, at_one: bool = False) -> CentralQuotient:
    """The n=2 nilpotent cone generated by Phi(tau_1) and Phi(tau_2) instead of trace powers."""
    if n != 2:
        raise InvalidParameterError(f"Phi(tau_d) generators are only available for n=2, got n={n}")
    a = rea_presentation(2, at_one)
    return CentralQuotient(a, [(phi_tau1(a), 0), (phi_tau2(a), 0)], label="nilcone-phi n=2")


def orbit_quotient_n2(xi: XiSpec) -> CentralQuotient:
    """
    F_q(O_xi^cl) for n=2: L_q(M) modulo Tr_q(L) - tau_1(xi) and Phi(tau_2) - tau_2(xi).

    Raises:
        InvalidXiSpecError: If xi is not a 2 x 2 Jordan type
    """
    if not isinstance(xi, XiSpec):
        raise InvalidXiSpecError(f"Expected an XiSpec, got {type(xi).__name__}")
    if xi.n != 2:
        raise InvalidXiSpecError(f"Orbit quotients are only available for n=2, got n={xi.n}")
    a = rea_presentation(2)
    c1, c2 = tau_at_xi(1, xi), tau_at_xi(2, xi)
    label = f"orbit {xi.to_json()}"
    logging.getLogger(__name__).debug(f"{label}: tau_1 = {format_scalar(c1)}, tau_2 = {format_scalar(c2)}")
    return CentralQuotient(a, [(phi_tau1(a), c1), (phi_tau2(a), c2)], label=label)
