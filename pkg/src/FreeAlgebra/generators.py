"""
Generators and words of the free algebra.

A generator is identified by a family tag and its indices: ``x[i,j]``,
``t[i,j]`` and ``l[i,j]`` are matrix generators, while single-index
generators such as the sphere coordinates ``x[-1]``, ``x[0]``, ``x[1]``
leave ``col`` unset. Words are plain tuples of generators; the empty tuple
is the unit.
"""

from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Tuple

from src.Models.errors import PolynomialParseError


class GeneratorId(NamedTuple):
    family: str
    row: int
    col: Optional[int] = None

    def __str__(self) -> str:
        if self.col is None:
            return f"{self.family}[{self.row}]"
        return f"{self.family}[{self.row},{self.col}]"

    def retag(self, family: str) -> "GeneratorId":
        return GeneratorId(family, self.row, self.col)

    def symbol_name(self) -> str:
        """Identifier-safe name used when handing text to sympy's parser."""
        row = str(self.row).replace("-", "m")
        if self.col is None:
            return f"{self.family}_{row}"
        col = str(self.col).replace("-", "m")
        return f"{self.family}_{row}_{col}"


Word = Tuple[GeneratorId, ...]

EMPTY_WORD: Word = ()


def matrix_generators(family: str, n: int) -> List[GeneratorId]:
    """All n*n generators of a family in row-major order."""
    return [GeneratorId(family, i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


def matrix_weights(generators: Iterable[GeneratorId], n: int) -> Dict[GeneratorId, Tuple[int, ...]]:
    """Weight e_row - e_col for each matrix generator."""
    weights = {}
    for g in generators:
        vector = [0] * n
        vector[g.row - 1] += 1
        vector[g.col - 1] -= 1
        weights[g] = tuple(vector)
    return weights


def format_word(word: Word) -> str:
    if not word:
        return "1"
    return "*".join(str(g) for g in word)


def retag_word(word: Word, family: str) -> Word:
    return tuple(g.retag(family) for g in word)


def word_to_json(word: Word) -> List[List[Any]]:
    result = []
    for g in word:
        if g.col is None:
            result.append([g.family, g.row])
        else:
            result.append([g.family, g.row, g.col])
    return result


def word_from_json(data: Any) -> Word:
    """
    Read a word from its JSON list form.

    Raises:
        PolynomialParseError: If an entry is not [family, row] or [family, row, col]
    """
    letters = []
    try:
        for entry in data:
            if len(entry) == 2:
                letters.append(GeneratorId(str(entry[0]), int(entry[1])))
            elif len(entry) == 3:
                letters.append(GeneratorId(str(entry[0]), int(entry[1]), int(entry[2])))
            else:
                raise PolynomialParseError(f"Bad generator entry: {entry!r}")
    except (TypeError, ValueError) as e:
        if isinstance(e, PolynomialParseError):
            raise
        raise PolynomialParseError(f"Bad word: {data!r}") from e
    return tuple(letters)
