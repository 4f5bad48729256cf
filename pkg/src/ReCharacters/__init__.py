"""
Constant solutions of the reflection equation and parametric family scans.
"""

from .re_check import FamilyResidual, is_re_solution, jordan_obstruction_sweep, re_residual, scan_family

__all__ = [
    "FamilyResidual",
    "is_re_solution",
    "jordan_obstruction_sweep",
    "re_residual",
    "scan_family",
]
