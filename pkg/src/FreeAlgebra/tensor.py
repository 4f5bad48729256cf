"""
Tensor products of presented algebras.

Elements are sparse maps from tuples of words (one word per factor) to
coefficients. Letters of different factors commute, so products are taken
factor by factor and each component is brought to normal form in its own
presentation.
"""

from typing import Any, Callable, Dict, Iterator, List, Mapping, Tuple, Union

from src.FreeAlgebra.generators import GeneratorId, Word, format_word, word_to_json
from src.FreeAlgebra.polynomial import NcPolynomial, format_coefficient
from src.FreeAlgebra.presentation import AlgebraPresentation
from src.Models.errors import InvalidParameterError

TensorWord = Tuple[Word, ...]


class TensorElement:
    """
    Element of a ``TensorAlgebra``. Terms are always stored reduced.
    """

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: "TensorAlgebra", terms: Dict[TensorWord, Any]):
        self.algebra = algebra
        self._terms = terms

    @property
    def terms(self) -> Mapping[TensorWord, Any]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self) -> Iterator[Tuple[TensorWord, Any]]:
        return iter(self._terms.items())

    def _combine(self, other: "TensorElement", sign: int) -> "TensorElement":
        terms = dict(self._terms)
        for words, coefficient in other._terms.items():
            value = coefficient if sign > 0 else -coefficient
            if words in terms:
                value = terms[words] + value
            if value:
                terms[words] = value
            else:
                terms.pop(words, None)
        return TensorElement(self.algebra, terms)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        return self._combine(other, 1)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self._combine(other, -1)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.algebra, {w: -c for w, c in self._terms.items()})

    def scale(self, factor: Any) -> "TensorElement":
        terms = {}
        for words, coefficient in self._terms.items():
            value = coefficient * factor
            if value:
                terms[words] = value
        return TensorElement(self.algebra, terms)

    def __mul__(self, other: Any) -> "TensorElement":
        if isinstance(other, TensorElement):
            return self.algebra.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other: Any) -> "TensorElement":
        return self.scale(other)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def sorted_terms(self) -> List[Tuple[TensorWord, Any]]:
        keys = [factor.order.key for factor in self.algebra.factors]

        def sort_key(item):
            return tuple(key(word) for key, word in zip(keys, item[0]))

        return sorted(self._terms.items(), key=sort_key, reverse=True)

    def to_polynomial(self) -> NcPolynomial:
        """Collapse a single-factor element to a polynomial."""
        if len(self.algebra.factors) != 1:
            raise InvalidParameterError("Only single-factor tensor elements collapse to polynomials")
        return NcPolynomial({words[0]: c for words, c in self._terms.items()})

    def to_json(self) -> List[Dict[str, Any]]:
        return [
            {"coeff": format_coefficient(c), "words": [word_to_json(w) for w in words]}
            for words, c in self.sorted_terms()
        ]

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for words, coefficient in self.sorted_terms():
            body = " (x) ".join(format_word(w) for w in words)
            text = format_coefficient(coefficient)
            if text == "1":
                piece, negative = body, False
            elif text == "-1":
                piece, negative = body, True
            else:
                piece, negative = f"({text})*{body}", False
            if not pieces:
                pieces.append(f"-{piece}" if negative else piece)
            else:
                pieces.append(f" - {piece}" if negative else f" + {piece}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"TensorElement({self})"


class TensorAlgebra:
    """
    Tensor product of presented algebras.

    Args:
        *factors: The presentations, left to right

    Raises:
        InvalidParameterError: If no factor is given
    """

    def __init__(self, *factors: AlgebraPresentation):
        if not factors:
            raise InvalidParameterError("A tensor algebra needs at least one factor")
        self.factors = tuple(factors)
        self.one = factors[0].one

    @property
    def left(self) -> AlgebraPresentation:
        return self.factors[0]

    @property
    def right(self) -> AlgebraPresentation:
        return self.factors[-1]

    def _reduce(self, terms: Mapping[TensorWord, Any]) -> Dict[TensorWord, Any]:
        result: Dict[TensorWord, Any] = {}
        for words, coefficient in terms.items():
            if not coefficient:
                continue
            expansions: List[Tuple[TensorWord, Any]] = [((), coefficient)]
            for factor, word in zip(self.factors, words):
                reduced = factor.reduce_word(word)
                expansions = [
                    (prefix + (w,), c * rc)
                    for prefix, c in expansions
                    for w, rc in reduced.items()
                ]
            for reduced_words, value in expansions:
                if reduced_words in result:
                    value = result[reduced_words] + value
                if value:
                    result[reduced_words] = value
                else:
                    result.pop(reduced_words, None)
        return result

    def element(self, terms: Mapping[TensorWord, Any]) -> TensorElement:
        """Build an element from raw terms, reducing each component."""
        for words in terms:
            if len(words) != len(self.factors):
                raise InvalidParameterError(f"Term {words!r} does not have {len(self.factors)} components")
        return TensorElement(self, self._reduce(terms))

    def pure(self, *polys: NcPolynomial) -> TensorElement:
        """The pure tensor p_1 (x) ... (x) p_k."""
        if len(polys) != len(self.factors):
            raise InvalidParameterError(f"Expected {len(self.factors)} components, got {len(polys)}")
        expansions: List[Tuple[TensorWord, Any]] = [((), self.one)]
        for poly in polys:
            expansions = [(prefix + (w,), c * pc) for prefix, c in expansions for w, pc in poly.items()]
        terms: Dict[TensorWord, Any] = {}
        for words, value in expansions:
            terms[words] = terms[words] + value if words in terms else value
        return self.element(terms)

    def unit(self) -> TensorElement:
        return TensorElement(self, {tuple(() for _ in self.factors): self.one})

    def zero(self) -> TensorElement:
        return TensorElement(self, {})

    def multiply(self, u: TensorElement, v: TensorElement) -> TensorElement:
        """Componentwise product (middle interchange), each component normal-formed."""
        terms: Dict[TensorWord, Any] = {}
        for words_u, cu in u.items():
            for words_v, cv in v.items():
                words = tuple(a + b for a, b in zip(words_u, words_v))
                value = cu * cv
                if words in terms:
                    value = terms[words] + value
                if value:
                    terms[words] = value
                else:
                    terms.pop(words, None)
        return TensorElement(self, self._reduce(terms))


ComponentImage = Union[TensorElement, NcPolynomial, Any]


def expand_component(
    u: TensorElement,
    index: int,
    fn: Callable[[Word], ComponentImage],
    target: TensorAlgebra,
) -> TensorElement:
    """
    Apply a linear map to one tensor component.

    ``fn`` maps a word to a tensor element (the component is split into
    several factors), a polynomial (replaced in place) or a scalar (the
    component is removed).
    """
    terms: Dict[TensorWord, Any] = {}
    for words, coefficient in u.items():
        image = fn(words[index])
        if isinstance(image, TensorElement):
            parts = list(image.items())
        elif isinstance(image, NcPolynomial):
            parts = [((w,), c) for w, c in image.items()]
        else:
            parts = [((), image)] if image else []
        for sub_words, sub_coefficient in parts:
            new_words = words[:index] + tuple(sub_words) + words[index + 1:]
            value = coefficient * sub_coefficient
            if new_words in terms:
                value = terms[new_words] + value
            if value:
                terms[new_words] = value
            else:
                terms.pop(new_words, None)
    return target.element(terms)


def tensor_multiply(u: TensorElement, v: TensorElement, t: TensorAlgebra) -> TensorElement:
    return t.multiply(u, v)


def apply_homomorphism(
    p: NcPolynomial,
    image: Callable[[GeneratorId], TensorElement],
    target: TensorAlgebra,
    anti: bool = False,
) -> TensorElement:
    """
    Extend a map on generators to an algebra (or anti-algebra) homomorphism.

    Word images are built left to right from the images of their prefixes
    and cached for the duration of the call.
    """
    cache: Dict[Word, TensorElement] = {(): target.unit()}
    generator_images: Dict[GeneratorId, TensorElement] = {}

    def word_image(word: Word) -> TensorElement:
        cached = cache.get(word)
        if cached is not None:
            return cached
        last = word[-1]
        if last not in generator_images:
            generator_images[last] = image(last)
        prefix = word_image(word[:-1])
        if anti:
            result = target.multiply(generator_images[last], prefix)
        else:
            result = target.multiply(prefix, generator_images[last])
        cache[word] = result
        return result

    total = target.zero()
    for word, coefficient in p.items():
        total = total + word_image(word).scale(coefficient)
    return total
