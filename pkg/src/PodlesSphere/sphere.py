"""
The n=2 orbit quotients L_q^{t,d} = L_q(M)/(Tr_q(L) = t, Phi(tau_2) = d) in
sphere coordinates.

With s the square root of (q + q^-1)^-1 and i the imaginary unit:

    x[1] = i l[1,2],  x[-1] = i l[2,1],  x[0] = s (l[1,1] - l[2,2])

The trace condition eliminates l[1,1] and l[2,2]:

    l[2,2] = sigma t - q s x[0],  l[1,1] = sigma t + q^-1 s x[0]

Substituting into the reflection equation relations and Phi(tau_2) - d and
orienting under x[-1] < x[0] < x[1] leaves four rules, whose coefficients
depend on (t, d) only through

    alpha = q^-1 s t,  beta = alpha^2 - (q^-1 + q^-3) d
"""

import logging
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

from src.BraidedMatrices import phi_tau2, rea_presentation, rea_relations
from src.FreeAlgebra import AlgebraPresentation, GeneratorId, MonomialOrder, NcPolynomial, complete
from src.Models.errors import InvalidParameterError
from src.Models.report import CheckReport, CheckResult
from src.Models.tables import HilbertTable
from src.PodlesSphere.extended_scalar import (
    ALPHA,
    BETA,
    PARAMETER_SIGMA,
    SIGMA,
    SIGMA_AT_ONE,
    ExtendedScalar,
)
from src.Scalars import Q, format_scalar, scalar_from_fraction, specialize_at_one, to_scalar

logger = logging.getLogger(__name__)

X_MINUS = GeneratorId("x", -1)
X_ZERO = GeneratorId("x", 0)
X_PLUS = GeneratorId("x", 1)
SPHERE_GENERATORS = (X_MINUS, X_ZERO, X_PLUS)
SPHERE_ORDER = MonomialOrder(SPHERE_GENERATORS)
SPHERE_WEIGHTS = {X_PLUS: (1, -1), X_ZERO: (0, 0), X_MINUS: (-1, 1)}


class SphereQuotient:
    """
    A sphere-coordinate presentation of L_q^{t,d}.

    Args:
        relations: The reduced relations of the elimination, largest
            leading word first
        presentation: The completed rewrite system on x[-1], x[0], x[1]
        alpha: Podles parameter alpha
        beta: Podles parameter beta
        t: Trace value, when the sphere was built from orbit data
        d: Phi(tau_2) value, when the sphere was built from orbit data
    """

    def __init__(
        self,
        relations: List[NcPolynomial],
        presentation: AlgebraPresentation,
        alpha: ExtendedScalar,
        beta: ExtendedScalar,
        t: Optional[Any] = None,
        d: Optional[Any] = None,
    ):
        self.logger = logging.getLogger(__name__)
        self.relations = list(relations)
        self.presentation = presentation
        self.alpha = alpha
        self.beta = beta
        self.t = t
        self.d = d

    @property
    def at_one(self) -> bool:
        return self.alpha.sigma == SIGMA_AT_ONE

    def rule_map(self) -> Dict[Tuple, NcPolynomial]:
        """lhs word -> rhs of the completed presentation."""
        return {rule.lhs: rule.rhs for rule in self.presentation.rules}

    def relation_texts(self) -> List[str]:
        return [f"{self.presentation.format(rule.as_relation(self.presentation.one))} = 0" for rule in self.presentation.rules]

    def is_weight_homogeneous(self) -> bool:
        return all(self.presentation.is_weight_homogeneous(r) for r in self.relations)

    def specialize_at_one(self) -> "SphereQuotient":
        """
        The classical sphere: every coefficient at q=1, s^2 = 1/2.

        Raises:
            NotInKError: If a coefficient has a pole at q=1
            InvalidParameterError: For spheres over a parameter field
        """
        if self.alpha.sigma != SIGMA:
            raise InvalidParameterError("Only spheres over Q(q) can be specialized at q=1")
        relations = [r.map_coefficients(ExtendedScalar.specialize_at_one) for r in self.relations]
        t = None if self.t is None else scalar_from_fraction(specialize_at_one(self.t))
        d = None if self.d is None else scalar_from_fraction(specialize_at_one(self.d))
        return _build(
            relations,
            self.alpha.specialize_at_one(),
            self.beta.specialize_at_one(),
            SIGMA_AT_ONE,
            t,
            d,
            label="sphere at q=1",
        )

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "relations": self.relation_texts(),
        }
        if self.t is not None:
            result["t"] = format_scalar(self.t)
            result["d"] = format_scalar(self.d)
        return result

    def __repr__(self) -> str:
        return f"SphereQuotient(alpha={self.alpha}, beta={self.beta}, {len(self.relations)} relations)"


def _build(
    relations: Sequence[NcPolynomial],
    alpha: ExtendedScalar,
    beta: ExtendedScalar,
    sigma: Any,
    t: Optional[Any] = None,
    d: Optional[Any] = None,
    label: str = "sphere",
) -> SphereQuotient:
    oriented = AlgebraPresentation.from_relations(
        "sphere",
        2,
        SPHERE_GENERATORS,
        relations,
        SPHERE_ORDER,
        SPHERE_WEIGHTS,
        at_one=sigma == SIGMA_AT_ONE,
        one=ExtendedScalar.one(sigma),
    )
    reduced = oriented.relations()
    completed, report = complete(oriented, degree_cap=3)
    if not report.confluent_as_given:
        logger.warning(f"{label}: completion added {len(report.added_rules)} rules")
    logger.info(f"{label}: {len(reduced)} relations, alpha = {alpha}, beta = {beta}")
    return SphereQuotient(reduced, completed, alpha, beta, t, d)


def _eliminate(shift: ExtendedScalar, d: ExtendedScalar) -> List[NcPolynomial]:
    """
    Substitute the sphere coordinates into the relations of L_q(M) and Phi(tau_2) - d.

    Args:
        shift: The constant part sigma t of l[1,1] and l[2,2]
        d: The value of Phi(tau_2)
    """
    sigma = shift.sigma
    one = ExtendedScalar.one(sigma)
    i = ExtendedScalar.imaginary_unit(sigma)
    s = ExtendedScalar.root(sigma)
    q = ExtendedScalar.lift(sigma.field.gens[0], sigma)

    x_minus, x_zero, x_plus = (NcPolynomial.monomial((g,), one) for g in SPHERE_GENERATORS)
    images = {
        GeneratorId("l", 1, 1): NcPolynomial.constant(shift) + x_zero.scale(s / q),
        GeneratorId("l", 2, 2): NcPolynomial.constant(shift) - x_zero.scale(q * s),
        GeneratorId("l", 1, 2): x_plus.scale(-i),
        GeneratorId("l", 2, 1): x_minus.scale(-i),
    }

    def lifted(p: NcPolynomial) -> NcPolynomial:
        return p.map_coefficients(lambda c: ExtendedScalar.lift(c, sigma))

    sources = [lifted(r) for r in rea_relations(2)]
    sources.append(lifted(phi_tau2(rea_presentation(2))) - NcPolynomial.constant(d))
    return [image for image in (p.substitute(images, one) for p in sources) if image]


def podles_parameters(t: Any, d: Any) -> Tuple[ExtendedScalar, ExtendedScalar]:
    """alpha = q^-1 s t and beta = alpha^2 - (q^-1 + q^-3) d."""
    t, d = to_scalar(t), to_scalar(d)
    alpha = ExtendedScalar.root() * (t / Q)
    beta = alpha * alpha - ExtendedScalar.lift(d * (1 / Q + 1 / Q ** 3))
    return alpha, beta


def parameters_to_orbit_data(alpha: ExtendedScalar, beta: ExtendedScalar) -> Tuple[Any, Any]:
    """
    Invert the parameter map: t = q alpha / s and d = q^3 (alpha^2 - beta) / (q^2 + 1).

    Raises:
        InvalidScalarError: If alpha is not a Q(q)-multiple of s or beta is not in Q(q)
    """
    alpha = ExtendedScalar.lift(alpha)
    beta = ExtendedScalar.lift(beta)
    t = (alpha * Q / ExtendedScalar.root()).rational_part()
    d = ((alpha * alpha - beta) * (Q ** 3 / (Q ** 2 + 1))).rational_part()
    return t, d


@lru_cache(maxsize=None)
def sphere_quotient(t: Any, d: Any) -> SphereQuotient:
    """
    Build L_q^{t,d} in the generators x[-1], x[0], x[1].

    Args:
        t: Value of Tr_q(L) (scalar, int or scalar text)
        d: Value of Phi(tau_2)
    """
    t, d = to_scalar(t), to_scalar(d)
    relations = _eliminate(ExtendedScalar.lift(SIGMA * t), ExtendedScalar.lift(d))
    alpha, beta = podles_parameters(t, d)
    return _build(relations, alpha, beta, SIGMA, t, d, label=f"sphere t={format_scalar(t)}, d={format_scalar(d)}")


def sphere_from_parameters(alpha: Any, beta: Any) -> SphereQuotient:
    """
    Build the sphere directly from (alpha, beta) with l[2,2] = q s (alpha - x[0])
    and l[1,1] = s (q alpha + q^-1 x[0]).

    alpha and beta may be ExtendedScalars over Q(q) or over the parameter
    field Q(q, alpha, beta).
    """
    alpha = ExtendedScalar.lift(alpha)
    beta = alpha._coerce(beta)
    sigma = alpha.sigma
    s = ExtendedScalar.root(sigma)
    q = ExtendedScalar.lift(sigma.field.gens[0], sigma)
    d = q ** 3 * (alpha * alpha - beta) / (q * q + 1)
    relations = _eliminate(q * s * alpha, d)
    return _build(relations, alpha, beta, sigma, label=f"sphere alpha={alpha}, beta={beta}")


def symbolic_sphere() -> SphereQuotient:
    """The sphere with free parameters: coefficients are rational functions of q, alpha and beta."""
    return sphere_from_parameters(
        ExtendedScalar.lift(ALPHA, PARAMETER_SIGMA),
        ExtendedScalar.lift(BETA, PARAMETER_SIGMA),
    )


def sphere_hilbert(sq: SphereQuotient, D: int) -> HilbertTable:
    """Irreducible word counts of the completed sphere presentation, degrees 0..D."""
    if not isinstance(D, int) or D < 0:
        raise InvalidParameterError(f"D must be a non-negative integer, got {D!r}")
    dims = [sq.presentation.irreducible_word_count(d) for d in range(D + 1)]
    return HilbertTable(dims, label=f"sphere alpha={sq.alpha}, beta={sq.beta}")


def parameter_invariance_check(pairs: Sequence[Tuple[Any, Any]]) -> CheckReport:
    """
    Check that the sphere relations depend on (t, d) only through (alpha, beta).

    Every pair is rebuilt through the (alpha, beta) substitution and must give
    the same rules; pairs with equal (alpha, beta) must give identical rule
    sets and pairs with different (alpha, beta) different ones.

    Raises:
        InvalidParameterError: If fewer than two pairs are given
    """
    if len(pairs) < 2:
        raise InvalidParameterError("Parameter invariance needs at least two (t, d) pairs")
    report = CheckReport("podles parameter invariance", details={"pairs": []})
    spheres = []
    for t, d in pairs:
        sq = sphere_quotient(to_scalar(t), to_scalar(d))
        direct = sphere_from_parameters(sq.alpha, sq.beta)
        report.details["pairs"].append(
            {"t": format_scalar(sq.t), "d": format_scalar(sq.d), "alpha": str(sq.alpha), "beta": str(sq.beta)}
        )
        report.add(
            CheckResult.from_residual(
                f"(t,d)=({format_scalar(sq.t)},{format_scalar(sq.d)}): elimination = (alpha,beta) substitution",
                0 if sq.rule_map() == direct.rule_map() else "; ".join(direct.relation_texts()),
            )
        )
        spheres.append(sq)

    for first in range(len(spheres)):
        for second in range(first + 1, len(spheres)):
            a, b = spheres[first], spheres[second]
            same_parameters = (a.alpha, a.beta) == (b.alpha, b.beta)
            same_rules = a.rule_map() == b.rule_map()
            expectation = "identical" if same_parameters else "different"
            report.add(
                CheckResult.from_residual(
                    f"pairs {first} and {second}: {expectation} (alpha,beta) give {expectation} relations",
                    0 if same_parameters == same_rules else "; ".join(b.relation_texts()),
                )
            )
    if not report.passed:
        logger.warning(f"Parameter invariance fails: {len(report.failures)} checks")
    return report
