"""
Sparse operators on tensor powers of the n-dimensional standard space.

Rows and columns are indexed by tuples of basis indices, (i, s) for the
square of the space, (i, s, u) for the cube and so on. Entries are stored
only when nonzero and can be any exact ring element: Q(q) scalars for the
R-matrix itself, noncommutative polynomials for matrices of generators.
"""

from typing import Any, Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from sympy.polys.fields import FracElement

from src.Models.errors import InvalidParameterError
from src.Scalars import FIELD, format_scalar

Index = Tuple[int, ...]
EntryKey = Tuple[Index, Index]


def _accumulate(entries: Dict[EntryKey, Any], key: EntryKey, value: Any) -> None:
    if key in entries:
        value = entries[key] + value
    if value:
        entries[key] = value
    else:
        entries.pop(key, None)


class TensorOperator:
    """
    Sparse operator on the k-th tensor power of an n-dimensional space.

    Args:
        n: Dimension of the underlying space
        power: Number of tensor factors (row and column tuples have this length)
        entries: (row, column) -> value; zero values are dropped
    """

    __slots__ = ("n", "power", "_entries")

    def __init__(self, n: int, power: int, entries: Optional[Dict[EntryKey, Any]] = None):
        if n < 1 or power < 1:
            raise InvalidParameterError(f"Operator needs n >= 1 and power >= 1, got n={n}, power={power}")
        self.n = n
        self.power = power
        self._entries: Dict[EntryKey, Any] = {}
        for (row, col), value in (entries or {}).items():
            if len(row) != power or len(col) != power:
                raise InvalidParameterError(f"Index {(row, col)} does not match tensor power {power}")
            if value:
                self._entries[(tuple(row), tuple(col))] = value

    @classmethod
    def identity(cls, n: int, power: int = 1, one: Any = None) -> "TensorOperator":
        one = FIELD.one if one is None else one
        return cls(n, power, {(index, index): one for index in cls.basis(n, power)})

    @staticmethod
    def basis(n: int, power: int) -> List[Index]:
        """All index tuples in lexicographic order."""
        indices: List[Index] = [()]
        for _ in range(power):
            indices = [prefix + (i,) for prefix in indices for i in range(1, n + 1)]
        return indices

    def entry(self, row: Iterable[int], col: Iterable[int], default: Any = None) -> Any:
        return self._entries.get((tuple(row), tuple(col)), default)

    def items(self):
        return self._entries.items()

    def __iter__(self) -> Iterator[Tuple[EntryKey, Any]]:
        return iter(self._entries.items())

    def __len__(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def map(self, fn: Callable[[Any], Any]) -> "TensorOperator":
        """Apply fn to every nonzero entry (used to lift scalars into polynomial entries)."""
        return TensorOperator(self.n, self.power, {key: fn(value) for key, value in self._entries.items()})

    def _check_shape(self, other: "TensorOperator") -> None:
        if self.n != other.n or self.power != other.power:
            raise InvalidParameterError(
                f"Shape mismatch: (n={self.n}, power={self.power}) vs (n={other.n}, power={other.power})"
            )

    def __add__(self, other: "TensorOperator") -> "TensorOperator":
        self._check_shape(other)
        entries = dict(self._entries)
        for key, value in other._entries.items():
            _accumulate(entries, key, value)
        return TensorOperator(self.n, self.power, entries)

    def __neg__(self) -> "TensorOperator":
        return TensorOperator(self.n, self.power, {key: -value for key, value in self._entries.items()})

    def __sub__(self, other: "TensorOperator") -> "TensorOperator":
        return self + (-other)

    def scale(self, factor: Any) -> "TensorOperator":
        return TensorOperator(self.n, self.power, {key: value * factor for key, value in self._entries.items()})

    def compose(self, other: "TensorOperator") -> "TensorOperator":
        """
        Operator product self * other (apply other first).

        Entry products keep the order self-entry times other-entry, which
        matters when the entries are noncommutative polynomials.
        """
        self._check_shape(other)
        by_row: Dict[Index, List[Tuple[Index, Any]]] = {}
        for (row, col), value in other._entries.items():
            by_row.setdefault(row, []).append((col, value))

        entries: Dict[EntryKey, Any] = {}
        for (row, middle), left in self._entries.items():
            for col, right in by_row.get(middle, ()):
                _accumulate(entries, (row, col), left * right)
        return TensorOperator(self.n, self.power, entries)

    __matmul__ = compose

    def kron(self, other: "TensorOperator") -> "TensorOperator":
        """Tensor product self (x) other acting on power self.power + other.power."""
        if self.n != other.n:
            raise InvalidParameterError(f"Cannot tensor operators with n={self.n} and n={other.n}")
        entries = {}
        for (row1, col1), v1 in self._entries.items():
            for (row2, col2), v2 in other._entries.items():
                entries[(row1 + row2, col1 + col2)] = v1 * v2
        return TensorOperator(self.n, self.power + other.power, entries)

    def apply(self, vector: Dict[Index, Any]) -> Dict[Index, Any]:
        """Image of a sparse vector (basis tuple -> coefficient)."""
        by_col: Dict[Index, List[Tuple[Index, Any]]] = {}
        for (row, col), value in self._entries.items():
            by_col.setdefault(col, []).append((row, value))
        result: Dict[Index, Any] = {}
        for col, coefficient in vector.items():
            for row, value in by_col.get(tuple(col), ()):
                total = result[row] + value * coefficient if row in result else value * coefficient
                if total:
                    result[row] = total
                else:
                    result.pop(row, None)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return self.n == other.n and self.power == other.power and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.n, self.power, frozenset(self._entries.items())))

    def sorted_items(self) -> List[Tuple[EntryKey, Any]]:
        return sorted(self._entries.items(), key=lambda item: item[0])

    def to_json(self) -> List[Dict[str, Any]]:
        """
        Nonzero entries in lexicographic (row, column) order.

        Square operators use the keys i, s (row) and j, t (column); higher
        powers list the row and column tuples.
        """
        result = []
        for (row, col), value in self.sorted_items():
            text = format_scalar(value) if isinstance(value, FracElement) else str(value)
            if self.power == 2:
                result.append({"i": row[0], "s": row[1], "j": col[0], "t": col[1], "value": text})
            else:
                result.append({"row": list(row), "col": list(col), "value": text})
        return result

    def __repr__(self) -> str:
        return f"TensorOperator(n={self.n}, power={self.power}, {len(self._entries)} nonzero entries)"
