"""
The FRT bialgebra F_q(M): presentation, quantum minors, coinvariants tau_d,
coalgebra structure and evaluation characters.
"""

from .characters import Character, evaluate_character, tau_at_xi
from .coalgebra import (
    check_det_central,
    check_det_grouplike,
    comultiply,
    coproduct_of_generator,
    counit,
    counit_of_word,
    verify_bialgebra,
)
from .frt import frt_order, frt_presentation, frt_relations, generator_operator, lifted_r_hat
from .minors import matrix_family, principal_subsets, quantum_determinant, quantum_minor, tau

__all__ = [
    "Character",
    "check_det_central",
    "check_det_grouplike",
    "comultiply",
    "coproduct_of_generator",
    "counit",
    "counit_of_word",
    "evaluate_character",
    "frt_order",
    "frt_presentation",
    "frt_relations",
    "generator_operator",
    "lifted_r_hat",
    "matrix_family",
    "principal_subsets",
    "quantum_determinant",
    "quantum_minor",
    "tau",
    "tau_at_xi",
    "verify_bialgebra",
]
