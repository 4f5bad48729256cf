"""
Standard R-matrix, its braided form R-hat and their structural checks.
"""

from .r_matrix import build_r, build_r_hat, check_braid, check_hecke, flip, specialize_operator
from .tensor_operator import TensorOperator

__all__ = [
    "TensorOperator",
    "build_r",
    "build_r_hat",
    "check_braid",
    "check_hecke",
    "flip",
    "specialize_operator",
]
