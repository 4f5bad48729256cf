"""
Comultiplication and counit of F_q(M), and the bialgebra checks built on them.

Delta(x[i,j]) = sum_s x[i,s] (x) x[s,j] and eps(x[i,j]) = delta_ij, both
extended as algebra homomorphisms. The same code serves F_q(G), whose
generators t[i,j] carry the same coalgebra structure.
"""

import logging
from typing import Any, Optional

from tqdm import tqdm

from src.FreeAlgebra import (
    AlgebraPresentation,
    GeneratorId,
    NcPolynomial,
    TensorAlgebra,
    TensorElement,
    Word,
    apply_homomorphism,
    expand_component,
    progress_enabled,
)
from src.Models.report import CheckReport, CheckResult
from src.QuantumMatrices.frt import frt_presentation
from src.QuantumMatrices.minors import quantum_determinant
from src.Scalars import FIELD

logger = logging.getLogger(__name__)


def coproduct_of_generator(g: GeneratorId, t: TensorAlgebra) -> TensorElement:
    family = g.family
    n = t.left.n
    total = t.zero()
    for s in range(1, n + 1):
        total = total + t.pure(
            NcPolynomial.generator(GeneratorId(family, g.row, s), t.one),
            NcPolynomial.generator(GeneratorId(family, s, g.col), t.one),
        )
    return total


def comultiply(p: NcPolynomial, a: AlgebraPresentation, target: Optional[TensorAlgebra] = None) -> TensorElement:
    """
    Delta(p) in a (x) a.

    Args:
        p: Element of F_q(M) or F_q(G)
        a: Its presentation
        target: Tensor algebra to land in (default a (x) a)
    """
    t = target or TensorAlgebra(a, a)
    return apply_homomorphism(p, lambda g: coproduct_of_generator(g, t), t)


def counit_of_word(word: Word, one: Any) -> Any:
    if all(g.row == g.col for g in word):
        return one
    return one - one


def counit(p: NcPolynomial, a: Optional[AlgebraPresentation] = None) -> Any:
    """eps(p): the image of p under x[i,j] -> delta_ij."""
    one = FIELD.one if a is None else a.one
    total = one - one
    for word, coefficient in p.items():
        if all(g.row == g.col for g in word):
            total = total + coefficient
    return total


def _comultiply_word(word: Word, t: TensorAlgebra) -> TensorElement:
    return comultiply(NcPolynomial.monomial(word, t.one), t.left, t)


def verify_bialgebra(n: int, show_progress: Optional[bool] = None) -> CheckReport:
    """
    Check coassociativity and both counit axioms of F_q(M) on every generator.

    Returns:
        CheckReport with one result per identity and generator
    """
    a = frt_presentation(n)
    show = progress_enabled() if show_progress is None else show_progress
    report = CheckReport(f"bialgebra n={n}")
    pair = TensorAlgebra(a, a)
    triple = TensorAlgebra(a, a, a)
    single = TensorAlgebra(a)

    for g in tqdm(a.generators, desc=f"Bialgebra axioms, n={n}", unit="generator", disable=not show):
        delta = comultiply(a.generator(g), a, pair)
        left = expand_component(delta, 0, lambda w: _comultiply_word(w, pair), triple)
        right = expand_component(delta, 1, lambda w: _comultiply_word(w, pair), triple)
        report.add(CheckResult.from_residual(f"(Delta (x) id)Delta({g}) = (id (x) Delta)Delta({g})", left - right))

        expected = single.pure(a.generator(g))
        eps_left = expand_component(delta, 0, lambda w: counit_of_word(w, a.one), single)
        eps_right = expand_component(delta, 1, lambda w: counit_of_word(w, a.one), single)
        report.add(CheckResult.from_residual(f"(eps (x) id)Delta({g}) = {g}", eps_left - expected))
        report.add(CheckResult.from_residual(f"(id (x) eps)Delta({g}) = {g}", eps_right - expected))

    if not report.passed:
        logger.warning(f"Bialgebra axioms fail for n={n}: {len(report.failures)} identities")
    return report


def check_det_central(a: AlgebraPresentation) -> CheckReport:
    """det_q commutes with every generator."""
    det = quantum_determinant(a)
    report = CheckReport(f"det_q central in {a.name} n={a.n}")
    for g in a.generators:
        x = a.generator(g)
        residual = a.normal_form(det * x - x * det)
        report.add(CheckResult.from_residual(f"det_q*{g} - {g}*det_q = 0", a.format(residual) if residual else 0))
    return report


def check_det_grouplike(a: AlgebraPresentation) -> CheckReport:
    """Delta(det_q) = det_q (x) det_q and eps(det_q) = 1."""
    det = quantum_determinant(a)
    pair = TensorAlgebra(a, a)
    report = CheckReport(f"det_q group-like in {a.name} n={a.n}")
    report.add(CheckResult.from_residual("Delta(det_q) = det_q (x) det_q", comultiply(det, a, pair) - pair.pure(det, det)))
    report.add(CheckResult.from_residual("eps(det_q) = 1", counit(det, a) - a.one))
    return report
