"""
The quantum special linear group F_q(G): presentation, antipode, Hopf
checks and the adjoint coactions on F_q(M) and L_q(M).
"""

from .coaction import adjoint_coaction, coaction_target
from .sl import antipode, antipode_of_generator, minus_q_power, sl_presentation, verify_hopf

__all__ = [
    "adjoint_coaction",
    "antipode",
    "antipode_of_generator",
    "coaction_target",
    "minus_q_power",
    "sl_presentation",
    "verify_hopf",
]
