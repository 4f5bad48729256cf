"""
Right adjoint coactions of F_q(G) on F_q(M) and on L_q(M).

On L_q(M) the coaction is the algebra map l[i,j] -> sum_{a,b} l[a,b] (x) S(t[i,a]) t[b,j].
On F_q(M) it is computed word by word from the double coproduct,
beta(x) = sum x_(2) (x) S(pi(x_(1))) pi(x_(3)), where pi renames x to t.
"""

import logging
from itertools import product
from typing import Dict, Optional

from src.FreeAlgebra import (
    AlgebraPresentation,
    GeneratorId,
    NcPolynomial,
    TensorAlgebra,
    TensorElement,
    Word,
    apply_homomorphism,
)
from src.Models.errors import InvalidParameterError
from src.QuantumSL.sl import antipode, sl_presentation

logger = logging.getLogger(__name__)


def coaction_target(source: AlgebraPresentation, group: Optional[AlgebraPresentation] = None) -> TensorAlgebra:
    return TensorAlgebra(source, group or sl_presentation(source.n, source.at_one))


def _rea_generator_image(g: GeneratorId, t: TensorAlgebra, antipodes: Dict[GeneratorId, NcPolynomial]) -> TensorElement:
    source, group = t.factors
    n = source.n
    total = t.zero()
    for a in range(1, n + 1):
        s_t = antipodes[GeneratorId("t", g.row, a)]
        for b in range(1, n + 1):
            right = group.normal_form(s_t * group.generator(GeneratorId("t", b, g.col)))
            if right:
                total = total + t.pure(source.generator(GeneratorId(g.family, a, b)), right)
    return total


def _frt_word_image(word: Word, t: TensorAlgebra, antipode_cache: Dict[Word, NcPolynomial]) -> Dict[tuple, object]:
    source, group = t.factors
    n = source.n
    k = len(word)
    terms: Dict[tuple, object] = {}
    for first in product(range(1, n + 1), repeat=k):
        left_word = tuple(GeneratorId("t", g.row, a) for g, a in zip(word, first))
        s_left = antipode_cache.get(left_word)
        if s_left is None:
            s_left = antipode(NcPolynomial.monomial(left_word, group.one), group)
            antipode_cache[left_word] = s_left
        if not s_left:
            continue
        for second in product(range(1, n + 1), repeat=k):
            middle = tuple(GeneratorId(g.family, a, b) for g, a, b in zip(word, first, second))
            right_word = tuple(GeneratorId("t", b, g.col) for g, b in zip(word, second))
            right = group.normal_form(s_left * NcPolynomial.monomial(right_word, group.one))
            for group_word, coefficient in right.items():
                key = (middle, group_word)
                value = terms[key] + coefficient if key in terms else coefficient
                if value:
                    terms[key] = value
                else:
                    terms.pop(key, None)
    return terms


def adjoint_coaction(
    p: NcPolynomial, source: AlgebraPresentation, target: Optional[TensorAlgebra] = None
) -> TensorElement:
    """
    beta(p) in source (x) F_q(G).

    Args:
        p: Element of F_q(M) (presentation name "frt") or L_q(M) (name "rea")
        source: Its presentation
        target: Tensor algebra source (x) F_q(G) (built when omitted)

    Raises:
        InvalidParameterError: If the source is neither F_q(M) nor L_q(M)
    """
    t = target or coaction_target(source)
    group = t.factors[1]

    if source.name == "rea":
        antipodes = {g: antipode(group.generator(g), group) for g in group.generators}
        return apply_homomorphism(p, lambda g: _rea_generator_image(g, t, antipodes), t)

    if source.name == "frt":
        antipode_cache: Dict[Word, NcPolynomial] = {}
        terms: Dict[tuple, object] = {}
        for word, coefficient in p.items():
            if not word:
                key = ((), ())
                terms[key] = terms[key] + coefficient if key in terms else coefficient
                continue
            for key, value in _frt_word_image(word, t, antipode_cache).items():
                value = value * coefficient
                terms[key] = terms[key] + value if key in terms else value
        return t.element({k: v for k, v in terms.items() if v})

    raise InvalidParameterError(f"No adjoint coaction on the algebra {source.name!r}")
