"""
Degree-truncated spans of one-sided ideals in a presented algebra.

The ideal generated by elements g_k (usually of the form "central element
minus constant") is approximated in the filtered algebra: at stage d the
span receives normal_form(g_k * w) for every irreducible word w with
deg g_k + deg w = d. Rows are kept in one echelon basis per weight, so
ranks and membership can be read per weight block.
"""

import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from tqdm import tqdm

from src.FreeAlgebra.echelon import EchelonBasis
from src.FreeAlgebra.polynomial import NcPolynomial
from src.FreeAlgebra.presentation import AlgebraPresentation, progress_enabled
from src.Models.errors import InvalidParameterError

Weight = Tuple[int, ...]


class TruncatedIdealSpan:
    """
    Incrementally built span of an ideal up to a total-degree cap.

    Args:
        presentation: Ambient algebra
        generators: Ideal generators; each must be weight homogeneous
        side: "right" multiplies words on the right of each generator,
            "left" on the left
        show_progress: Show a tqdm bar per stage (default from QORBITS_PROGRESS)

    Raises:
        InvalidParameterError: On an unknown side or a generator mixing weights
    """

    def __init__(
        self,
        presentation: AlgebraPresentation,
        generators: Sequence[NcPolynomial],
        side: str = "right",
        show_progress: Optional[bool] = None,
    ):
        self.logger = logging.getLogger(__name__)
        if side not in ("right", "left"):
            raise InvalidParameterError(f"Unknown ideal side: {side}")
        self.presentation = presentation
        self.side = side
        self.show_progress = progress_enabled() if show_progress is None else show_progress
        self.generators: List[NcPolynomial] = []
        for g in generators:
            g = presentation.normal_form(g)
            if not g:
                continue
            if not presentation.is_weight_homogeneous(g):
                raise InvalidParameterError(f"Ideal generator {presentation.format(g)} mixes weights")
            self.generators.append(g)
        self._blocks: Dict[Weight, EchelonBasis] = {}
        self._ranks: List[Dict[Weight, int]] = []

    @property
    def degree(self) -> int:
        """Highest stage built so far (-1 before the first stage)."""
        return len(self._ranks) - 1

    def _block(self, weight: Weight) -> EchelonBasis:
        block = self._blocks.get(weight)
        if block is None:
            block = EchelonBasis(self.presentation.order.key)
            self._blocks[weight] = block
        return block

    def _products(self, d: int) -> List[NcPolynomial]:
        pending = []
        for g in self.generators:
            k = d - g.degree()
            if k < 0:
                continue
            for word in self.presentation.irreducible_words(k):
                w = NcPolynomial.monomial(word, self.presentation.one)
                pending.append(g * w if self.side == "right" else w * g)
        return pending

    def extend_to(self, cap: int) -> "TruncatedIdealSpan":
        """Build every stage up to and including ``cap``."""
        if cap < 0:
            raise InvalidParameterError(f"Degree cap must be non-negative, got {cap}")
        a = self.presentation
        for d in range(self.degree + 1, cap + 1):
            products = self._products(d)
            added = 0
            for product in tqdm(
                products,
                desc=f"Ideal span of {a.name}, degree {d}",
                unit="row",
                disable=not self.show_progress,
            ):
                row = a.normal_form(product)
                if not row:
                    continue
                weight = a.weight_of(next(iter(row.words())))
                if self._block(weight).add(dict(row.items())):
                    added += 1
            self._ranks.append({w: b.rank for w, b in self._blocks.items() if b.rank})
            self.logger.debug(f"{a.name} {self.side} ideal span: degree {d}, {len(products)} products, rank +{added}")
        return self

    def rank(self, d: Optional[int] = None) -> int:
        """Total rank of the span through stage d (default: the last stage)."""
        return sum(self.ranks_by_weight(d).values())

    def ranks_by_weight(self, d: Optional[int] = None) -> Dict[Weight, int]:
        if d is None:
            d = self.degree
        if d < 0:
            return {}
        if d > self.degree:
            self.extend_to(d)
        return dict(self._ranks[d])

    def rank_increment(self, d: int) -> int:
        return self.rank(d) - self.rank(d - 1)

    def rank_increments_by_weight(self, d: int) -> Dict[Weight, int]:
        current = self.ranks_by_weight(d)
        previous = self.ranks_by_weight(d - 1)
        return {w: r - previous.get(w, 0) for w, r in current.items() if r - previous.get(w, 0)}

    def contains(self, p: NcPolynomial) -> bool:
        """Whether p lies in the span built so far; each weight component is tested in its block."""
        reduced = self.presentation.normal_form(p)
        components: Dict[Weight, Dict[Any, Any]] = {}
        for word, coefficient in reduced.items():
            components.setdefault(self.presentation.weight_of(word), {})[word] = coefficient
        for weight, component in components.items():
            block = self._blocks.get(weight)
            if block is None or not block.contains(component):
                return False
        return True

    def rows(self) -> List[NcPolynomial]:
        """Reduced echelon rows of every weight block."""
        result = []
        for weight in sorted(self._blocks):
            result.extend(NcPolynomial(row) for _, row in self._blocks[weight].reduced_rows())
        return result

    def __repr__(self) -> str:
        return (
            f"TruncatedIdealSpan({self.presentation.name}, {len(self.generators)} generators, "
            f"{self.side}, degree {self.degree}, rank {self.rank() if self.degree >= 0 else 0})"
        )


def same_ideal(
    presentation: AlgebraPresentation,
    first: Sequence[NcPolynomial],
    second: Sequence[NcPolynomial],
    cap: int,
    side: str = "right",
) -> bool:
    """Whether two generating sets span the same ideal up to total degree ``cap``."""
    left = TruncatedIdealSpan(presentation, first, side).extend_to(cap)
    right = TruncatedIdealSpan(presentation, second, side).extend_to(cap)
    if left.ranks_by_weight() != right.ranks_by_weight():
        return False
    return all(right.contains(row) for row in left.rows())
