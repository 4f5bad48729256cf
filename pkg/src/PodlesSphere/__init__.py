"""
n=2 orbit quotients as quantum spheres: the quartic scalar extension, the
elimination to x[-1], x[0], x[1] and the Podles parameters (alpha, beta).
"""

from .extended_scalar import ALPHA, BETA, PARAMETER_FIELD, PARAMETER_SIGMA, SIGMA, SIGMA_AT_ONE, ExtendedScalar
from .sphere import (
    SPHERE_GENERATORS,
    SPHERE_ORDER,
    SPHERE_WEIGHTS,
    X_MINUS,
    X_PLUS,
    X_ZERO,
    SphereQuotient,
    parameter_invariance_check,
    parameters_to_orbit_data,
    podles_parameters,
    sphere_from_parameters,
    sphere_hilbert,
    sphere_quotient,
    symbolic_sphere,
)

__all__ = [
    "ALPHA",
    "BETA",
    "PARAMETER_FIELD",
    "PARAMETER_SIGMA",
    "SIGMA",
    "SIGMA_AT_ONE",
    "SPHERE_GENERATORS",
    "SPHERE_ORDER",
    "SPHERE_WEIGHTS",
    "X_MINUS",
    "X_PLUS",
    "X_ZERO",
    "ExtendedScalar",
    "SphereQuotient",
    "parameter_invariance_check",
    "parameters_to_orbit_data",
    "podles_parameters",
    "sphere_from_parameters",
    "sphere_hilbert",
    "sphere_quotient",
    "symbolic_sphere",
]
