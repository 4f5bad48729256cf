"""
The Hopf algebra F_q(G) = F_q(M)/(det_q - 1) of the quantum special linear group.

Elements are words in t[i,j] reduced by the FRT rules, the rule orienting
det_q - 1 and whatever completion adds to make that system confluent up to
the degree cap.
"""

import logging
from functools import lru_cache
from typing import Any, Dict, Optional

from tqdm import tqdm

from src.FreeAlgebra import (
    AlgebraPresentation,
    GeneratorId,
    MonomialOrder,
    NcPolynomial,
    RewriteRule,
    TensorAlgebra,
    apply_homomorphism,
    complete,
    default_completion_cap,
    expand_component,
    matrix_generators,
    progress_enabled,
)
from src.Models.errors import InvalidParameterError, OrientationError
from src.Models.report import CheckReport, CheckResult
from src.QuantumMatrices import comultiply, counit_of_word, frt_presentation, quantum_determinant, quantum_minor

logger = logging.getLogger(__name__)


def minus_q_power(exponent: int, q_value: Any) -> Any:
    """(-q)^exponent for any integer exponent, without negative powers of a negative base."""
    sign = -1 if exponent % 2 else 1
    if exponent >= 0:
        return sign * q_value ** exponent
    return sign / q_value ** (-exponent)


@lru_cache(maxsize=None)
def sl_presentation(n: int, at_one: bool = False, degree_cap: Optional[int] = None) -> AlgebraPresentation:
    """
    Build F_q(G) for G = SL(n).

    Args:
        n: Matrix size, n >= 2
        at_one: Build the q=1 specialization (coordinate ring of SL(n))
        degree_cap: Completion cap (default: the larger of QORBITS_COMPLETION_CAP
            and 2n, the degree reached by overlaps of the det_q rule)

    Returns:
        Presentation over t[i,j]

    Raises:
        InvalidParameterError: If n < 2
        OrientationError: If det_q - 1 cannot be oriented
    """
    if not isinstance(n, int) or n < 2:
        raise InvalidParameterError(f"F_q(G) needs n >= 2, got {n!r}")
    frt = frt_presentation(n, at_one)
    generators = matrix_generators("t", n)
    weights = {g.retag("t"): w for g, w in frt.weights.items()}
    order = MonomialOrder(generators)
    rules = [RewriteRule(tuple(g.retag("t") for g in rule.lhs), rule.rhs.retag("t")) for rule in frt.rules]
    base = AlgebraPresentation("sl", n, generators, rules, order, weights, at_one=at_one)

    det = base.normal_form(quantum_determinant(frt).retag("t")) - base.one
    lead = order.leading_word(det)
    if not lead:
        raise OrientationError("det_q - 1 reduces to a constant", element=det)
    scale = det.coefficient(lead)
    rhs = NcPolynomial({w: -c / scale for w, c in det.items() if w != lead})
    det_rule = RewriteRule(lead, rhs)
    logger.debug(f"Oriented det_q - 1 for n={n}: {det_rule}")

    presentation = base.with_rules(base.rules + [det_rule])
    cap = max(default_completion_cap(), 2 * n) if degree_cap is None else degree_cap
    completed, report = complete(presentation, cap)
    if report.added_rules:
        logger.info(f"F_q(G), n={n}, cap {cap}: completion added {len(report.added_rules)} rules")
    return completed


def antipode_of_generator(g: GeneratorId, a: AlgebraPresentation) -> NcPolynomial:
    """S(t[i,j]) = (-q)^{i-j} det_q(rows without j, cols without i)."""
    i, j = g.row, g.col
    rows = [k for k in range(1, a.n + 1) if k != j]
    cols = [k for k in range(1, a.n + 1) if k != i]
    return quantum_minor(rows, cols, a).scale(minus_q_power(i - j, a.q_value))


def antipode(p: NcPolynomial, a: AlgebraPresentation) -> NcPolynomial:
    """
    S(p), the anti-homomorphic extension of the cofactor formula.

    Args:
        p: Element of F_q(G)
        a: The F_q(G) presentation
    """
    single = TensorAlgebra(a)
    cache: Dict[GeneratorId, NcPolynomial] = {}

    def image(g: GeneratorId):
        if g not in cache:
            cache[g] = antipode_of_generator(g, a)
        return single.pure(cache[g])

    return apply_homomorphism(p, image, single, anti=True).to_polynomial()


def verify_hopf(n: int, show_progress: Optional[bool] = None) -> CheckReport:
    """
    Check the antipode axioms, eps o S = eps and coassociativity on every generator of F_q(G).

    Raises:
        InvalidParameterError: If n is not 2 or 3
    """
    if n not in (2, 3):
        raise InvalidParameterError(f"Hopf verification is supported for n in {{2, 3}}, got {n}")
    a = sl_presentation(n)
    show = progress_enabled() if show_progress is None else show_progress
    report = CheckReport(f"hopf n={n}")
    pair = TensorAlgebra(a, a)
    triple = TensorAlgebra(a, a, a)

    def t(i: int, j: int) -> NcPolynomial:
        return a.generator(GeneratorId("t", i, j))

    for g in tqdm(a.generators, desc=f"Hopf axioms, n={n}", unit="generator", disable=not show):
        i, j = g.row, g.col
        expected = a.one if i == j else a.one - a.one
        left = NcPolynomial.zero()
        right = NcPolynomial.zero()
        for s in range(1, n + 1):
            left = left + antipode(t(i, s), a) * t(s, j)
            right = right + t(i, s) * antipode(t(s, j), a)
        left_residual = a.normal_form(left - NcPolynomial.constant(expected))
        right_residual = a.normal_form(right - NcPolynomial.constant(expected))
        report.add(CheckResult.from_residual(f"m(S (x) id)Delta({g}) = eps({g})", a.format(left_residual) if left_residual else 0))
        report.add(CheckResult.from_residual(f"m(id (x) S)Delta({g}) = eps({g})", a.format(right_residual) if right_residual else 0))

        s_of_g = antipode(a.generator(g), a)
        eps_s = sum((c for w, c in s_of_g.items() if counit_of_word(w, a.one)), a.one - a.one)
        report.add(CheckResult.from_residual(f"eps(S({g})) = eps({g})", eps_s - expected))

        delta = comultiply(a.generator(g), a, pair)
        lifted_left = expand_component(delta, 0, lambda w: comultiply(NcPolynomial.monomial(w, a.one), a, pair), triple)
        lifted_right = expand_component(delta, 1, lambda w: comultiply(NcPolynomial.monomial(w, a.one), a, pair), triple)
        report.add(CheckResult.from_residual(f"(Delta (x) id)Delta({g}) = (id (x) Delta)Delta({g})", lifted_left - lifted_right))

    if not report.passed:
        logger.warning(f"Hopf axioms fail for n={n}: {len(report.failures)} identities")
    return report
