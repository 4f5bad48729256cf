import csv
import io
from typing import Any, Dict, List, Optional, Tuple

Weight = Tuple[int, ...]


def _weight_key(weight: Weight) -> Tuple[int, ...]:
    # Largest weight first in lexicographic order, e.g. (1,-1) before (0,0)
    return tuple(-w for w in weight)


class HilbertTable:
    """
    Dimensions of the degree components 0..D of a graded (or filtered) algebra.
    """

    def __init__(self, dims: List[int], label: Optional[str] = None):
        """
        Initialize a HilbertTable.

        Args:
            dims: dims[d] is the dimension of the degree-d component
            label: Optional description, e.g. "nilcone n=2"
        """
        self.dims = list(dims)
        self.label = label

    @property
    def max_degree(self) -> int:
        return len(self.dims) - 1

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "HilbertTable":
        return cls(dims=[int(d) for d in data["dims"]], label=data.get("label"))

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {"dims": list(self.dims)}
        if self.label:
            result["label"] = self.label
        return result

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["degree", "dim"])
        for degree, dim in enumerate(self.dims):
            writer.writerow([degree, dim])
        return buffer.getvalue()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HilbertTable):
            return NotImplemented
        return self.dims == other.dims

    def __repr__(self) -> str:
        return f"HilbertTable({self.dims})"


class WeightTable:
    """
    Weight multiplicities of one degree component.
    """

    def __init__(self, degree: int, multiplicities: Dict[Weight, int], label: Optional[str] = None):
        """
        Initialize a WeightTable.

        Args:
            degree: The degree d of the component
            multiplicities: weight tuple -> multiplicity; zero entries are dropped
            label: Optional description
        """
        self.degree = degree
        self.multiplicities = {tuple(w): m for w, m in multiplicities.items() if m}
        self.label = label

    @property
    def total(self) -> int:
        """Sum of multiplicities, the dimension of the degree component."""
        return sum(self.multiplicities.values())

    def sorted_items(self) -> List[Tuple[Weight, int]]:
        return sorted(self.multiplicities.items(), key=lambda item: _weight_key(item[0]))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "WeightTable":
        return cls(
            degree=int(data["degree"]),
            multiplicities={tuple(entry["weight"]): int(entry["mult"]) for entry in data["weights"]},
            label=data.get("label"),
        )

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "degree": self.degree,
            "weights": [{"weight": list(w), "mult": m} for w, m in self.sorted_items()],
        }
        if self.label:
            result["label"] = self.label
        return result

    def to_csv(self, header: bool = True) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        if header:
            writer.writerow(["degree", "weight", "mult"])
        for weight, mult in self.sorted_items():
            writer.writerow([self.degree, " ".join(str(w) for w in weight), mult])
        return buffer.getvalue()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightTable):
            return NotImplemented
        return self.degree == other.degree and self.multiplicities == other.multiplicities

    def __repr__(self) -> str:
        return f"WeightTable(degree={self.degree}, {dict(self.sorted_items())})"
