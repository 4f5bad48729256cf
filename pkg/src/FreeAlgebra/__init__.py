"""
Free associative algebra engine.

Words over indexed generators, noncommutative polynomials, monomial orders,
rewrite systems with memoized normal forms, overlap completion up to a
degree cap, sparse echelon spans and tensor products of presented algebras.
"""

from .echelon import EchelonBasis, subtract_multiple
from .generators import (
    EMPTY_WORD,
    GeneratorId,
    Word,
    format_word,
    matrix_generators,
    matrix_weights,
    retag_word,
    word_from_json,
    word_to_json,
)
from .ideal_span import TruncatedIdealSpan, same_ideal
from .polynomial import (
    NcPolynomial,
    format_coefficient,
    format_polynomial,
    parse_polynomial,
    polynomial_from_json,
    polynomial_to_json,
)
from .presentation import (
    AlgebraPresentation,
    CompletionReport,
    MonomialOrder,
    RewriteRule,
    complete,
    default_completion_cap,
    irreducible_word_count,
    normal_form,
    overlap_ambiguities,
    progress_enabled,
    weight_of,
)
from .tensor import TensorAlgebra, TensorElement, apply_homomorphism, expand_component, tensor_multiply

__all__ = [
    "EMPTY_WORD",
    "AlgebraPresentation",
    "CompletionReport",
    "EchelonBasis",
    "GeneratorId",
    "MonomialOrder",
    "NcPolynomial",
    "RewriteRule",
    "TensorAlgebra",
    "TensorElement",
    "TruncatedIdealSpan",
    "Word",
    "apply_homomorphism",
    "complete",
    "default_completion_cap",
    "expand_component",
    "format_coefficient",
    "format_polynomial",
    "format_word",
    "irreducible_word_count",
    "matrix_generators",
    "matrix_weights",
    "normal_form",
    "overlap_ambiguities",
    "parse_polynomial",
    "polynomial_from_json",
    "polynomial_to_json",
    "progress_enabled",
    "retag_word",
    "same_ideal",
    "subtract_multiple",
    "tensor_multiply",
    "weight_of",
    "word_from_json",
    "word_to_json",
]
