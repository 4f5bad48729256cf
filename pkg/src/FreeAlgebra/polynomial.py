"""
Noncommutative polynomials and their text/JSON forms.

``NcPolynomial`` is a sparse map from words to coefficients. Coefficients are
usually Q(q) scalars, but nothing here depends on that: any exact field
element supporting ``+``, ``-``, ``*`` and truth testing works, which lets the
sphere module run the same engine over its quartic extension.
"""

import re
from fractions import Fraction
from types import MappingProxyType
from typing import Any, Callable, Dict, Iterator, List, Mapping, Optional, Tuple

from sympy import Add, Mul, Symbol, expand
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.fields import FracElement

from src.FreeAlgebra.generators import (
    EMPTY_WORD,
    GeneratorId,
    Word,
    format_word,
    word_from_json,
    word_to_json,
)
from src.Models.errors import InvalidScalarError, PolynomialParseError
from src.Scalars import FIELD, Q_SYMBOL, format_scalar, from_sympy, parse_scalar, to_scalar

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_GENERATOR_PATTERN = re.compile(r"([A-Za-z]+)\[\s*(-?\d+)\s*(?:,\s*(-?\d+)\s*)?\]")


def _coerce(value: Any) -> Any:
    if isinstance(value, (int, Fraction, str)):
        return to_scalar(value)
    return value


def default_word_key(word: Word) -> Tuple:
    """Degree-lexicographic key on (family, row, col); used when no presentation is at hand."""
    return (len(word), tuple((g.family, g.row, 0 if g.col is None else g.col) for g in word))


class NcPolynomial:
    """
    Finite linear combination of words.

    Zero coefficients are never stored. Instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Word, Any]] = None):
        self._terms: Dict[Word, Any] = {}
        if terms:
            for word, coefficient in terms.items():
                coefficient = _coerce(coefficient)
                if coefficient:
                    self._terms[tuple(word)] = coefficient

    @classmethod
    def _raw(cls, terms: Dict[Word, Any]) -> "NcPolynomial":
        poly = cls.__new__(cls)
        poly._terms = terms
        return poly

    @classmethod
    def zero(cls) -> "NcPolynomial":
        return cls._raw({})

    @classmethod
    def constant(cls, value: Any) -> "NcPolynomial":
        return cls({EMPTY_WORD: value})

    @classmethod
    def monomial(cls, word: Word, coefficient: Any = None) -> "NcPolynomial":
        return cls({tuple(word): FIELD.one if coefficient is None else coefficient})

    @classmethod
    def generator(cls, g: GeneratorId, coefficient: Any = None) -> "NcPolynomial":
        return cls.monomial((g,), coefficient)

    @property
    def terms(self) -> Mapping[Word, Any]:
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def words(self) -> List[Word]:
        return list(self._terms)

    def coefficient(self, word: Word, default: Any = None) -> Any:
        return self._terms.get(tuple(word), default)

    def degree(self) -> int:
        return max((len(w) for w in self._terms), default=0)

    def is_constant(self) -> bool:
        return all(not w for w in self._terms)

    def constant_term(self) -> Any:
        return self._terms.get(EMPTY_WORD)

    def generators(self) -> set:
        return {g for word in self._terms for g in word}

    def map_coefficients(self, fn: Callable[[Any], Any]) -> "NcPolynomial":
        return NcPolynomial({w: fn(c) for w, c in self._terms.items()})

    def scale(self, factor: Any) -> "NcPolynomial":
        factor = _coerce(factor)
        if not factor:
            return NcPolynomial.zero()
        terms = {}
        for word, coefficient in self._terms.items():
            value = coefficient * factor
            if value:
                terms[word] = value
        return NcPolynomial._raw(terms)

    def retag(self, family: str) -> "NcPolynomial":
        return NcPolynomial._raw({tuple(g.retag(family) for g in w): c for w, c in self._terms.items()})

    def substitute(self, images: Mapping[GeneratorId, "NcPolynomial"], one: Any = None) -> "NcPolynomial":
        """Apply the algebra homomorphism sending each generator to its image."""
        one = FIELD.one if one is None else one
        result = NcPolynomial.zero()
        for word, coefficient in self._terms.items():
            product = NcPolynomial.constant(one)
            for g in word:
                product = product * images[g]
            result = result + product.scale(coefficient)
        return result

    def __add__(self, other: Any) -> "NcPolynomial":
        if not isinstance(other, NcPolynomial):
            other = NcPolynomial.constant(other)
        terms = dict(self._terms)
        for word, coefficient in other._terms.items():
            if word in terms:
                value = terms[word] + coefficient
                if value:
                    terms[word] = value
                else:
                    del terms[word]
            else:
                terms[word] = coefficient
        return NcPolynomial._raw(terms)

    __radd__ = __add__

    def __neg__(self) -> "NcPolynomial":
        return NcPolynomial._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: Any) -> "NcPolynomial":
        if not isinstance(other, NcPolynomial):
            other = NcPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other: Any) -> "NcPolynomial":
        return (-self) + other

    def __mul__(self, other: Any) -> "NcPolynomial":
        if not isinstance(other, NcPolynomial):
            return self.scale(other)
        terms: Dict[Word, Any] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                word = w1 + w2
                value = c1 * c2
                if word in terms:
                    value = terms[word] + value
                if value:
                    terms[word] = value
                else:
                    terms.pop(word, None)
        return NcPolynomial._raw(terms)

    def __rmul__(self, other: Any) -> "NcPolynomial":
        return self.scale(other)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Word, Any]]:
        return iter(self._terms.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, NcPolynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, FracElement)):
            return self == NcPolynomial.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"NcPolynomial({format_polynomial(self)})"


def format_coefficient(value: Any) -> str:
    if isinstance(value, FracElement):
        return format_scalar(value)
    return str(value)


def sorted_terms(p: NcPolynomial, order_key: Optional[Callable[[Word], Any]] = None) -> List[Tuple[Word, Any]]:
    """Terms with the largest word first."""
    key = order_key or default_word_key
    return sorted(p.items(), key=lambda item: key(item[0]), reverse=True)


def format_polynomial(p: NcPolynomial, order_key: Optional[Callable[[Word], Any]] = None) -> str:
    """
    Render a polynomial, e.g. ``(q^-1)*x[1,1]*x[1,2] - x[2,2]``.

    Args:
        p: The polynomial
        order_key: Sort key of the ambient monomial order; terms are printed
            from the largest word down
    """
    if not p:
        return "0"
    pieces = []
    for word, coefficient in sorted_terms(p, order_key):
        text = format_coefficient(coefficient)
        negative = False
        if text == "1":
            body = format_word(word)
        elif text == "-1":
            body = format_word(word)
            negative = True
        elif not word:
            body = f"({text})"
        else:
            body = f"({text})*{format_word(word)}"

        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def parse_polynomial(text: str) -> NcPolynomial:
    """
    Parse polynomial text such as ``(q^-1)*x[1,1]*x[1,2] - x[2,2]``.

    Generators are rewritten into noncommutative sympy symbols, the
    expression is expanded by sympy, and each term is split into its
    commutative coefficient (a rational function of q) and its ordered word.

    Raises:
        PolynomialParseError: If the text is malformed or uses unknown symbols
    """
    if not isinstance(text, str) or not text.strip():
        raise PolynomialParseError(f"Empty polynomial text: {text!r}")

    generators: Dict[str, GeneratorId] = {}

    def to_symbol(match: "re.Match") -> str:
        col = match.group(3)
        g = GeneratorId(match.group(1), int(match.group(2)), int(col) if col is not None else None)
        generators[g.symbol_name()] = g
        return g.symbol_name()

    rewritten = _GENERATOR_PATTERN.sub(to_symbol, text)
    symbols = {name: Symbol(name, commutative=False) for name in generators}
    local_dict: Dict[str, Any] = dict(symbols)
    local_dict["q"] = Q_SYMBOL

    try:
        expr = expand(parse_expr(rewritten, local_dict=local_dict, transformations=_TRANSFORMATIONS))
    except Exception as e:
        raise PolynomialParseError(f"Cannot parse polynomial {text!r}: {e}") from e

    by_symbol = {symbols[name]: g for name, g in generators.items()}
    terms: Dict[Word, Any] = {}
    for term in Add.make_args(expr):
        commutative, noncommutative = term.args_cnc()
        word: List[GeneratorId] = []
        for factor in noncommutative:
            base, exponent = factor.as_base_exp()
            if base not in by_symbol or not exponent.is_Integer or exponent < 1:
                raise PolynomialParseError(f"Unsupported factor {factor} in {text!r}")
            word.extend([by_symbol[base]] * int(exponent))
        try:
            coefficient = from_sympy(Mul(*commutative))
        except InvalidScalarError as e:
            raise PolynomialParseError(f"Bad coefficient in {text!r}: {e}") from e
        key = tuple(word)
        terms[key] = terms[key] + coefficient if key in terms else coefficient
    return NcPolynomial(terms)


def polynomial_to_json(p: NcPolynomial, order_key: Optional[Callable[[Word], Any]] = None) -> List[Dict[str, Any]]:
    return [
        {"coeff": format_coefficient(coefficient), "word": word_to_json(word)}
        for word, coefficient in sorted_terms(p, order_key)
    ]


def polynomial_from_json(data: Any) -> NcPolynomial:
    """
    Read the JSON list form produced by ``polynomial_to_json``.

    Raises:
        PolynomialParseError: On malformed entries
    """
    if not isinstance(data, list):
        raise PolynomialParseError("Polynomial JSON must be a list of terms")
    terms: Dict[Word, Any] = {}
    for entry in data:
        if not isinstance(entry, dict) or "coeff" not in entry or "word" not in entry:
            raise PolynomialParseError(f"Bad term entry: {entry!r}")
        try:
            coefficient = parse_scalar(str(entry["coeff"]))
        except InvalidScalarError as e:
            raise PolynomialParseError(str(e)) from e
        word = word_from_json(entry["word"])
        terms[word] = terms[word] + coefficient if word in terms else coefficient
    return NcPolynomial(terms)
