"""
Sparse exact row echelon forms over a field.

Vectors are dictionaries from words to coefficients. Pivots are chosen by the
leading word under the ambient monomial order, so a pivot row doubles as a
rewrite rule "leading word -> minus the tail".
"""

import logging
from typing import Any, Callable, Dict, Iterable, List, Mapping, Tuple

from src.FreeAlgebra.generators import Word

logger = logging.getLogger(__name__)

SparseRow = Dict[Word, Any]


def subtract_multiple(row: SparseRow, pivot: Mapping[Word, Any], factor: Any) -> None:
    """In place: row -= factor * pivot."""
    for word, coefficient in pivot.items():
        delta = factor * coefficient
        current = row.get(word)
        if current is None:
            row[word] = -delta
        else:
            value = current - delta
            if value:
                row[word] = value
            else:
                del row[word]


class EchelonBasis:
    """
    Incrementally maintained echelon basis keyed by leading word.

    Rows are stored monic. Adding a row reduces its head against the existing
    pivots; rows that reduce to zero are linearly dependent and are dropped.

    Args:
        order_key: Sort key of the monomial order; larger keys lead
    """

    def __init__(self, order_key: Callable[[Word], Any]):
        self.order_key = order_key
        self._pivots: Dict[Word, SparseRow] = {}
        self._keys: Dict[Word, Any] = {}

    def _key(self, word: Word) -> Any:
        key = self._keys.get(word)
        if key is None:
            key = self.order_key(word)
            self._keys[word] = key
        return key

    def leading_word(self, row: Mapping[Word, Any]) -> Word:
        return max(row, key=self._key)

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def leading_words(self) -> List[Word]:
        return list(self._pivots)

    def head_reduce(self, row: Mapping[Word, Any]) -> SparseRow:
        """Reduce until the leading word is not a pivot; returns a new dict."""
        work = {w: c for w, c in row.items() if c}
        while work:
            lead = self.leading_word(work)
            pivot = self._pivots.get(lead)
            if pivot is None:
                break
            subtract_multiple(work, pivot, work[lead])
        return work

    def add(self, row: Mapping[Word, Any]) -> bool:
        """
        Insert a row.

        Returns:
            True if the row was independent of the basis and raised the rank
        """
        reduced = self.head_reduce(row)
        if not reduced:
            return False
        lead = self.leading_word(reduced)
        scale = reduced[lead]
        self._pivots[lead] = {w: c / scale for w, c in reduced.items()}
        return True

    def extend(self, rows: Iterable[Mapping[Word, Any]]) -> int:
        """Insert several rows; returns how many raised the rank."""
        return sum(1 for row in rows if self.add(row))

    def contains(self, row: Mapping[Word, Any]) -> bool:
        return not self.head_reduce(row)

    def reduced_rows(self) -> List[Tuple[Word, SparseRow]]:
        """
        Reduced row echelon form: monic rows whose tails avoid every pivot word.

        Returns:
            (leading word, row) pairs, largest leading word first
        """
        done: Dict[Word, SparseRow] = {}
        for lead in sorted(self._pivots, key=self._key):
            row = dict(self._pivots[lead])
            while True:
                targets = [w for w in row if w != lead and w in done]
                if not targets:
                    break
                target = max(targets, key=self._key)
                subtract_multiple(row, done[target], row[target])
            done[lead] = row
        return [(lead, done[lead]) for lead in sorted(done, key=self._key, reverse=True)]
