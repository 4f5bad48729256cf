"""
Central quotients of L_q(M): the quantum nilpotent cone, n=2 orbit
quotients, Hilbert and weight tables, ideal membership and the classical
q=1 oracle.
"""

from .hilbert import (
    check_two_sided,
    classical_oracle,
    classical_quotient,
    compare_with_oracle,
    hilbert,
    member,
    weight_table,
)
from .quotient import CentralQuotient, nilcone, nilcone_phi, orbit_quotient_n2

__all__ = [
    "CentralQuotient",
    "check_two_sided",
    "classical_oracle",
    "classical_quotient",
    "compare_with_oracle",
    "hilbert",
    "member",
    "nilcone",
    "nilcone_phi",
    "orbit_quotient_n2",
    "weight_table",
]
