"""
Presented algebras: monomial orders, rewrite systems, normal forms and
overlap completion.

An ``AlgebraPresentation`` is a free algebra modulo an oriented rewrite
system. Normal forms are computed by leftmost rewriting with a per-word
cache; ``complete`` resolves overlap ambiguities up to a degree cap and adds
whatever rules are needed to make the system confluent up to that degree.
"""

import logging
import os
from collections import defaultdict
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from tqdm import tqdm

from src.FreeAlgebra.echelon import EchelonBasis
from src.FreeAlgebra.generators import EMPTY_WORD, GeneratorId, Word, format_word
from src.FreeAlgebra.polynomial import NcPolynomial, format_polynomial, polynomial_to_json
from src.Models.errors import InvalidParameterError, OrientationError
from src.Scalars import FIELD, Q

logger = logging.getLogger(__name__)


def default_completion_cap() -> int:
    return int(os.environ.get("QORBITS_COMPLETION_CAP", "4"))


def progress_enabled() -> bool:
    return os.environ.get("QORBITS_PROGRESS", "0").lower() in ("1", "true", "yes")


class MonomialOrder:
    """
    Degree-lexicographic order induced by a generator precedence.

    Words are compared by length first, then letter by letter from the left
    using the precedence (earlier generators are smaller).

    Args:
        precedence: All generators, smallest first
    """

    def __init__(self, precedence: Sequence[GeneratorId]):
        self.precedence = tuple(precedence)
        self._rank = {g: i for i, g in enumerate(self.precedence)}
        if len(self._rank) != len(self.precedence):
            raise InvalidParameterError("Generator precedence contains duplicates")

    def key(self, word: Word) -> Tuple[int, Tuple[int, ...]]:
        return (len(word), tuple(self._rank[g] for g in word))

    def less(self, u: Word, v: Word) -> bool:
        return self.key(u) < self.key(v)

    def leading_word(self, p: NcPolynomial) -> Word:
        return max(p.words(), key=self.key)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MonomialOrder) and self.precedence == other.precedence

    def __hash__(self) -> int:
        return hash(self.precedence)

    def __repr__(self) -> str:
        return "MonomialOrder(" + " < ".join(str(g) for g in self.precedence) + ")"


class RewriteRule(NamedTuple):
    lhs: Word
    rhs: NcPolynomial

    def as_relation(self, one: Any = None) -> NcPolynomial:
        """The relation lhs - rhs that the rule orients."""
        return NcPolynomial.monomial(self.lhs, FIELD.one if one is None else one) - self.rhs

    def __str__(self) -> str:
        return f"{format_word(self.lhs)} -> {self.rhs}"


def _contains_subword(word: Word, part: Word) -> bool:
    size = len(part)
    return any(word[i:i + size] == part for i in range(len(word) - size + 1))


class AlgebraPresentation:
    """
    Generators, an oriented rewrite system, a monomial order and a weight grading.

    The presentation is immutable after construction; the only internal state
    that changes is the cache of word normal forms.

    Args:
        name: Short tag of the algebra ("frt", "sl", "rea", "sphere", ...)
        n: Size parameter; weights are integer tuples of length n
        generators: Generators of the free algebra
        rules: Rewrite rules; every rhs word must be smaller than its lhs
        order: Monomial order used to orient the rules
        weights: Weight of each generator
        at_one: Whether the deformation parameter is specialized to q=1
        one: Unit of the coefficient field

    Raises:
        OrientationError: If a rule is not strictly decreasing, not weight
            homogeneous, or duplicates another rule's lhs
    """

    def __init__(
        self,
        name: str,
        n: int,
        generators: Sequence[GeneratorId],
        rules: Iterable[RewriteRule],
        order: MonomialOrder,
        weights: Mapping[GeneratorId, Tuple[int, ...]],
        at_one: bool = False,
        one: Any = None,
    ):
        self.logger = logging.getLogger(__name__)
        self.name = name
        self.n = n
        self.generators = tuple(generators)
        self.order = order
        self.weights = dict(weights)
        self.at_one = at_one
        self.q_value = FIELD.one if at_one else Q
        self.one = FIELD.one if one is None else one

        known = set(self.generators)
        self._rules: Dict[Word, NcPolynomial] = {}
        for rule in rules:
            self._check_rule(rule, known)
            self._rules[rule.lhs] = rule.rhs
        self._lhs_lengths = sorted({len(lhs) for lhs in self._rules})
        self._nf_cache: Dict[Word, Dict[Word, Any]] = {}
        self._irreducible: Dict[int, List[Word]] = {0: [EMPTY_WORD]}

    def _check_rule(self, rule: RewriteRule, known: set) -> None:
        lhs, rhs = rule
        if not lhs:
            raise OrientationError("A rewrite rule cannot have the empty word as lhs", element=rhs)
        if lhs in self._rules:
            raise OrientationError(f"Duplicate rule for {format_word(lhs)}", element=rhs)
        unknown = (set(lhs) | rhs.generators()) - known
        if unknown:
            names = ", ".join(sorted(str(g) for g in unknown))
            raise OrientationError(f"Rule {format_word(lhs)} uses unknown generators: {names}", element=rhs)
        lhs_key = self.order.key(lhs)
        lhs_weight = self.weight_of(lhs)
        for word, _ in rhs.items():
            if self.order.key(word) >= lhs_key:
                raise OrientationError(
                    f"Rule {format_word(lhs)} -> {rhs} does not decrease: {format_word(word)} is not smaller",
                    element=rhs,
                )
            if self.weight_of(word) != lhs_weight:
                raise OrientationError(
                    f"Rule {format_word(lhs)} -> {rhs} is not weight homogeneous",
                    element=rhs,
                )

    @classmethod
    def from_relations(
        cls,
        name: str,
        n: int,
        generators: Sequence[GeneratorId],
        relations: Iterable[NcPolynomial],
        order: MonomialOrder,
        weights: Mapping[GeneratorId, Tuple[int, ...]],
        at_one: bool = False,
        one: Any = None,
    ) -> "AlgebraPresentation":
        """
        Orient a list of relations into an inter-reduced rewrite system.

        The relations are brought to reduced row echelon form with pivots at
        their leading words; each row becomes one rule. Duplicates and linear
        consequences disappear in the elimination.

        Raises:
            OrientationError: If the relations imply a nonzero constant
        """
        basis = EchelonBasis(order.key)
        for relation in relations:
            if relation:
                basis.add(dict(relation.items()))
        rules = [_row_to_rule(lead, row) for lead, row in basis.reduced_rows()]
        logger.debug(f"Oriented {len(rules)} rules for {name} (n={n})")
        return cls(name, n, generators, rules, order, weights, at_one=at_one, one=one)

    def with_rules(self, rules: Iterable[RewriteRule], name: Optional[str] = None) -> "AlgebraPresentation":
        return AlgebraPresentation(
            name or self.name,
            self.n,
            self.generators,
            rules,
            self.order,
            self.weights,
            at_one=self.at_one,
            one=self.one,
        )

    @property
    def rules(self) -> List[RewriteRule]:
        """Rules sorted by lhs, largest first."""
        ordered = sorted(self._rules, key=self.order.key, reverse=True)
        return [RewriteRule(lhs, self._rules[lhs]) for lhs in ordered]

    def lhs_words(self) -> List[Word]:
        return list(self._rules)

    def rule_for(self, lhs: Word) -> Optional[NcPolynomial]:
        return self._rules.get(tuple(lhs))

    def relations(self) -> List[NcPolynomial]:
        return [rule.as_relation(self.one) for rule in self.rules]

    def generator(self, g: GeneratorId) -> NcPolynomial:
        return NcPolynomial.monomial((g,), self.one)

    def constant(self, value: Any) -> NcPolynomial:
        return NcPolynomial.constant(value)

    def find_reducible(self, word: Word) -> Optional[Tuple[int, int]]:
        """Leftmost (start, length) at which some lhs occurs, or None."""
        size = len(word)
        for start in range(size):
            for length in self._lhs_lengths:
                if start + length > size:
                    break
                if word[start:start + length] in self._rules:
                    return start, length
        return None

    def is_irreducible(self, word: Word) -> bool:
        return self.find_reducible(tuple(word)) is None

    def _reduce_word(self, word: Word) -> Dict[Word, Any]:
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached

        hit = self.find_reducible(word)
        if hit is None:
            result = {word: self.one}
        else:
            start, length = hit
            prefix, suffix = word[:start], word[start + length:]
            result: Dict[Word, Any] = {}
            for rhs_word, coefficient in self._rules[word[start:start + length]].items():
                for reduced_word, reduced_coefficient in self._reduce_word(prefix + rhs_word + suffix).items():
                    value = coefficient * reduced_coefficient
                    if reduced_word in result:
                        value = result[reduced_word] + value
                    if value:
                        result[reduced_word] = value
                    else:
                        result.pop(reduced_word, None)
        self._nf_cache[word] = result
        return result

    def reduce_word(self, word: Word) -> Mapping[Word, Any]:
        """Normal form of a single word as a read-only word -> coefficient map."""
        return MappingProxyType(self._reduce_word(tuple(word)))

    def normal_form(self, p: NcPolynomial) -> NcPolynomial:
        """Reduce every word of p; the result contains no lhs as a subword."""
        terms: Dict[Word, Any] = {}
        for word, coefficient in p.items():
            for reduced_word, reduced_coefficient in self._reduce_word(word).items():
                value = coefficient * reduced_coefficient
                if reduced_word in terms:
                    value = terms[reduced_word] + value
                if value:
                    terms[reduced_word] = value
                else:
                    terms.pop(reduced_word, None)
        return NcPolynomial(terms)

    def multiply(self, *factors: NcPolynomial) -> NcPolynomial:
        """Normal form of an ordered product, reducing after each factor."""
        product = NcPolynomial.constant(self.one)
        for factor in factors:
            product = self.normal_form(product * factor)
        return product

    def irreducible_words(self, d: int) -> List[Word]:
        """Degree-d words avoiding every lhs, in increasing monomial order."""
        if d < 0:
            raise InvalidParameterError(f"Degree must be non-negative, got {d}")
        if d not in self._irreducible:
            extended = []
            for word in self.irreducible_words(d - 1):
                for g in self.generators:
                    candidate = word + (g,)
                    if not any(
                        candidate[-length:] in self._rules
                        for length in self._lhs_lengths
                        if length <= len(candidate)
                    ):
                        extended.append(candidate)
            extended.sort(key=self.order.key)
            self._irreducible[d] = extended
            self.logger.debug(f"{self.name}: {len(extended)} irreducible words of degree {d}")
        return self._irreducible[d]

    def irreducible_word_count(self, d: int) -> int:
        return len(self.irreducible_words(d))

    def weight_of(self, word: Word) -> Tuple[int, ...]:
        total = [0] * self.n
        for g in word:
            for index, value in enumerate(self.weights[g]):
                total[index] += value
        return tuple(total)

    def weights_of(self, p: NcPolynomial) -> set:
        return {self.weight_of(word) for word in p.words()}

    def is_weight_homogeneous(self, p: NcPolynomial) -> bool:
        return len(self.weights_of(p)) <= 1

    def format(self, p: NcPolynomial) -> str:
        return format_polynomial(p, self.order.key)

    def to_json(self, p: NcPolynomial) -> List[Dict[str, Any]]:
        return polynomial_to_json(p, self.order.key)

    def __repr__(self) -> str:
        point = "q=1" if self.at_one else "generic q"
        return f"AlgebraPresentation({self.name}, n={self.n}, {len(self._rules)} rules, {point})"


def _row_to_rule(lead: Word, row: Mapping[Word, Any]) -> RewriteRule:
    if not lead:
        raise OrientationError(
            "Relations imply a nonzero constant; the quotient is zero",
            element=NcPolynomial(dict(row)),
        )
    return RewriteRule(lead, NcPolynomial({w: -c for w, c in row.items() if w != lead}))


@dataclass
class CompletionReport:
    """Outcome of an overlap completion run."""

    degree_cap: int
    ambiguities_checked: int = 0
    passes: int = 0
    added_rules: List[RewriteRule] = field(default_factory=list)
    removed_rules: List[Word] = field(default_factory=list)

    @property
    def confluent_as_given(self) -> bool:
        return not self.added_rules and not self.removed_rules

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree_cap": self.degree_cap,
            "ambiguities_checked": self.ambiguities_checked,
            "passes": self.passes,
            "added_rules": [str(rule) for rule in self.added_rules],
            "removed_rules": [format_word(lhs) for lhs in self.removed_rules],
        }


def overlap_ambiguities(
    presentation: AlgebraPresentation, degree_cap: int
) -> Iterator[Tuple[Word, NcPolynomial, NcPolynomial]]:
    """
    Overlap ambiguities u = a·b, v = b·c with |a·b·c| <= degree_cap.

    Yields:
        (a·b·c, rhs(u)·c, a·rhs(v)) for each proper overlap
    """
    lhs_words = sorted(presentation.lhs_words(), key=presentation.order.key)
    by_first: Dict[GeneratorId, List[Word]] = defaultdict(list)
    for v in lhs_words:
        by_first[v[0]].append(v)

    one = presentation.one
    for u in lhs_words:
        rhs_u = presentation.rule_for(u)
        for overlap in range(1, len(u)):
            suffix = u[-overlap:]
            for v in by_first.get(suffix[0], ()):
                if len(v) <= overlap or v[:overlap] != suffix:
                    continue
                if len(u) + len(v) - overlap > degree_cap:
                    continue
                tail = v[overlap:]
                head = u[:-overlap]
                left = rhs_u * NcPolynomial.monomial(tail, one)
                right = NcPolynomial.monomial(head, one) * presentation.rule_for(v)
                yield u + tail, left, right


def _interreduce(
    base: AlgebraPresentation, rules: Dict[Word, NcPolynomial], report: CompletionReport
) -> AlgebraPresentation:
    """Remove rules whose lhs contains another lhs, re-orienting what they said."""
    while True:
        pending = []
        for lhs in list(rules):
            if any(other != lhs and _contains_subword(lhs, other) for other in rules):
                rhs = rules.pop(lhs)
                pending.append(NcPolynomial.monomial(lhs, base.one) - rhs)
                report.removed_rules.append(lhs)
        if not pending:
            break
        system = base.with_rules([RewriteRule(l, r) for l, r in rules.items()])
        basis = EchelonBasis(base.order.key)
        for poly in pending:
            reduced = system.normal_form(poly)
            if reduced:
                basis.add(dict(reduced.items()))
        for lead, row in basis.reduced_rows():
            rule = _row_to_rule(lead, row)
            rules[rule.lhs] = rule.rhs
            report.added_rules.append(rule)

    system = base.with_rules([RewriteRule(l, r) for l, r in rules.items()])
    return base.with_rules([RewriteRule(l, system.normal_form(r)) for l, r in rules.items()])


def complete(
    presentation: AlgebraPresentation,
    degree_cap: Optional[int] = None,
    show_progress: Optional[bool] = None,
) -> Tuple[AlgebraPresentation, CompletionReport]:
    """
    Resolve overlap ambiguities up to a degree cap, adding rules as needed.

    Args:
        presentation: The rewrite system to complete
        degree_cap: Largest total degree of ambiguities checked (default from
            QORBITS_COMPLETION_CAP, 4)
        show_progress: Show a tqdm bar per pass

    Returns:
        The completed presentation and a report of added/removed rules

    Raises:
        InvalidParameterError: If degree_cap < 3
        OrientationError: If a consequence is a nonzero constant
    """
    cap = default_completion_cap() if degree_cap is None else degree_cap
    if cap < 3:
        raise InvalidParameterError(f"Completion degree cap must be at least 3, got {cap}")
    show = progress_enabled() if show_progress is None else show_progress

    report = CompletionReport(degree_cap=cap)
    current = presentation
    while True:
        report.passes += 1
        ambiguities = list(overlap_ambiguities(current, cap))
        basis = EchelonBasis(current.order.key)
        for _, left, right in tqdm(
            ambiguities,
            desc=f"Resolving {current.name} overlaps (pass {report.passes})",
            unit="overlap",
            disable=not show,
        ):
            report.ambiguities_checked += 1
            difference = current.normal_form(left) - current.normal_form(right)
            if difference:
                basis.add(dict(difference.items()))

        if not basis.rank:
            break

        new_rules = [_row_to_rule(lead, row) for lead, row in basis.reduced_rows()]
        logger.info(f"Completion of {current.name}: pass {report.passes} adds {len(new_rules)} rules")
        report.added_rules.extend(new_rules)
        rules = {rule.lhs: rule.rhs for rule in current.rules}
        for rule in new_rules:
            rules[rule.lhs] = rule.rhs
        current = _interreduce(current, rules, report)

    logger.debug(
        f"Completion of {presentation.name} at cap {cap}: {report.ambiguities_checked} ambiguities, "
        f"{len(report.added_rules)} rules added"
    )
    return current, report


def normal_form(p: NcPolynomial, a: AlgebraPresentation) -> NcPolynomial:
    return a.normal_form(p)


def irreducible_word_count(a: AlgebraPresentation, d: int) -> int:
    return a.irreducible_word_count(d)


def weight_of(w: Word, a: AlgebraPresentation) -> Tuple[int, ...]:
    return a.weight_of(tuple(w))
