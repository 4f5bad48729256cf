"""
The reflection equation algebra L_q(M): presentation, matrices over the
algebra, quantum traces of powers, centrality and coinvariance checks and
the n=2 Phi(tau_2) identities.
"""

from .checks import (
    check_central,
    check_coinvariant,
    newton_constant,
    phi_tau1,
    phi_tau2,
    phi_tau2_identity,
    verify_rea_coaction,
)
from .matrix import MatrixOverAlgebra, q_weight, trace_power
from .rea import precedence_candidates, rea_presentation, rea_relations

__all__ = [
    "MatrixOverAlgebra",
    "check_central",
    "check_coinvariant",
    "newton_constant",
    "phi_tau1",
    "phi_tau2",
    "phi_tau2_identity",
    "precedence_candidates",
    "q_weight",
    "rea_presentation",
    "rea_relations",
    "trace_power",
    "verify_rea_coaction",
]
