"""
Centrality and coinvariance checks in L_q(M), the coaction axioms, and the
n=2 identities relating Phi(tau_2) to quantum traces of powers of L.
"""

import logging
from typing import Any, Dict, Optional, Tuple

from src.BraidedMatrices.matrix import MatrixOverAlgebra, trace_power
from src.BraidedMatrices.rea import rea_presentation
from src.FreeAlgebra import (
    AlgebraPresentation,
    GeneratorId,
    NcPolynomial,
    TensorAlgebra,
    TensorElement,
    expand_component,
    same_ideal,
)
from src.Models.errors import InvalidParameterError
from src.Models.report import CheckReport, CheckResult
from src.QuantumMatrices import comultiply, counit_of_word
from src.QuantumSL import adjoint_coaction, coaction_target
from src.Scalars import format_scalar, to_scalar

logger = logging.getLogger(__name__)


def check_central(
    p: NcPolynomial, n: int, a: Optional[AlgebraPresentation] = None
) -> Tuple[bool, Dict[GeneratorId, NcPolynomial]]:
    """
    Whether p commutes with every generator l[i,j].

    Returns:
        (central, residuals) where residuals maps each generator with a
        nonzero normal_form(p*l - l*p) to that residual
    """
    presentation = a or rea_presentation(n)
    residuals = {}
    for g in presentation.generators:
        l = presentation.generator(g)
        residual = presentation.normal_form(p * l - l * p)
        if residual:
            residuals[g] = residual
    if residuals:
        logger.debug(f"{presentation.format(p)} fails to commute with {len(residuals)} generators")
    return not residuals, residuals


def check_coinvariant(
    p: NcPolynomial, n: int, a: Optional[AlgebraPresentation] = None
) -> Tuple[bool, TensorElement]:
    """
    Whether beta(p) = p (x) 1 under the adjoint coaction.

    Returns:
        (coinvariant, residual beta(p) - p (x) 1)
    """
    presentation = a or rea_presentation(n)
    target = coaction_target(presentation)
    residual = adjoint_coaction(p, presentation, target) - target.pure(
        presentation.normal_form(p), NcPolynomial.constant(target.factors[1].one)
    )
    return not residual, residual


def verify_rea_coaction(n: int = 2) -> CheckReport:
    """
    Coaction axioms on L_q(M): (beta (x) id)beta = (id (x) Delta)beta and
    (id (x) eps)beta = id on every generator, and beta kills every relation.
    """
    a = rea_presentation(n)
    target = coaction_target(a)
    group = target.factors[1]
    triple = TensorAlgebra(a, group, group)
    single = TensorAlgebra(a)
    group_pair = TensorAlgebra(group, group)
    report = CheckReport(f"rea coaction n={n}")

    for g in a.generators:
        beta = adjoint_coaction(a.generator(g), a, target)
        twice = expand_component(beta, 0, lambda w: adjoint_coaction(NcPolynomial.monomial(w, a.one), a, target), triple)
        split = expand_component(
            beta, 1, lambda w: comultiply(NcPolynomial.monomial(w, group.one), group, group_pair), triple
        )
        report.add(CheckResult.from_residual(f"(beta (x) id)beta({g}) = (id (x) Delta)beta({g})", twice - split))
        counit_side = expand_component(beta, 1, lambda w: counit_of_word(w, group.one), single)
        report.add(CheckResult.from_residual(f"(id (x) eps)beta({g}) = {g}", counit_side - single.pure(a.generator(g))))

    for relation in a.relations():
        image = adjoint_coaction(relation, a, target)
        report.add(CheckResult.from_residual(f"beta({a.format(relation)}) = 0", image))

    if not report.passed:
        logger.warning(f"Coaction axioms fail on L_q(M), n={n}: {len(report.failures)} identities")
    return report


def _require_two(a: AlgebraPresentation) -> None:
    if a.n != 2:
        raise InvalidParameterError(f"Phi(tau_1) and Phi(tau_2) are only available for n=2, got n={a.n}")


def phi_tau1(a: Optional[AlgebraPresentation] = None) -> NcPolynomial:
    """Phi(tau_1) = q l[1,1] + q^-1 l[2,2] = Tr_q(L), n=2."""
    presentation = a or rea_presentation(2)
    _require_two(presentation)
    return MatrixOverAlgebra.generator_matrix(presentation).quantum_trace()


def phi_tau2(a: Optional[AlgebraPresentation] = None) -> NcPolynomial:
    """Phi(tau_2) = l[1,1] l[2,2] - q^2 l[1,2] l[2,1], n=2."""
    presentation = a or rea_presentation(2)
    _require_two(presentation)

    def l(i: int, j: int) -> NcPolynomial:
        return presentation.generator(GeneratorId("l", i, j))

    q = presentation.q_value
    return presentation.normal_form(l(1, 1) * l(2, 2) - (l(1, 2) * l(2, 1)).scale(q * q))


def newton_constant(c1: Any, c2: Any, q_value: Any) -> Any:
    """The value c2' of Tr_q(L^2) when Tr_q(L) = c1 and Phi(tau_2) = c2."""
    return (q_value * c1 * c1 - (q_value + 1 / q_value) * c2) / (q_value * q_value)


def phi_tau2_identity(n: int = 2, c1: Any = 0, c2: Any = 0, cap: int = 4) -> CheckReport:
    """
    Verify Phi(tau_2) = (q+q^-1)^-1 (q Tr_q(L)^2 - q^2 Tr_q(L^2)), its q=1 limit,
    and that {Tr_q(L) - c1, Phi(tau_2) - c2} and {Tr_q(L) - c1, Tr_q(L^2) - c2'}
    span the same ideal up to degree ``cap``.

    Raises:
        InvalidParameterError: If n != 2
    """
    if n != 2:
        raise InvalidParameterError(f"The Phi(tau_2) identity is stated for n=2 only, got n={n}")
    a = rea_presentation(2)
    q = a.q_value
    c1, c2 = to_scalar(c1), to_scalar(c2)
    report = CheckReport("phi-tau2 n=2", details={"c1": format_scalar(c1), "c2": format_scalar(c2), "cap": cap})

    trace = phi_tau1(a)
    trace_sq = trace_power(2, 2, a)
    det = phi_tau2(a)
    rhs = a.normal_form((trace * trace).scale(q) - trace_sq.scale(q * q)).scale(1 / (q + 1 / q))
    residual = a.normal_form(det - rhs)
    report.add(
        CheckResult.from_residual(
            "Phi(tau_2) = (q+q^-1)^-1 (q Tr_q(L)^2 - q^2 Tr_q(L^2))", a.format(residual) if residual else 0
        )
    )

    classical = rea_presentation(2, at_one=True)

    def cl(i: int, j: int) -> NcPolynomial:
        return classical.generator(GeneratorId("l", i, j))

    limit = classical.normal_form(phi_tau2(classical) - (cl(1, 1) * cl(2, 2) - cl(1, 2) * cl(2, 1)))
    report.add(CheckResult.from_residual("Phi(tau_2) at q=1 = l11 l22 - l12 l21", classical.format(limit) if limit else 0))

    c2_prime = newton_constant(c1, c2, q)
    report.details["c2_prime"] = format_scalar(c2_prime)
    equal = same_ideal(a, [trace - c1, det - c2], [trace - c1, trace_sq - c2_prime], cap)
    report.add(
        CheckResult.from_residual(
            f"(Tr_q(L) - c1, Phi(tau_2) - c2) = (Tr_q(L) - c1, Tr_q(L^2) - c2') up to degree {cap}",
            0 if equal else "truncated ideal spans differ",
        )
    )
    return report
