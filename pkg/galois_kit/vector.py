"""
Fuzzy vectors (elements of A^I) and the pointwise algebra on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import ShapeError
from .lattice import Element, LabelLike, LatticeSpec
from .relation import IndexSet
from .sweep import Values, enumerate_values, rank_of


@dataclass(frozen=True)
class FuzzyVector:
    """
    A total map from an index set to carrier elements.
    """
    index: IndexSet
    values: Values
    lattice: LatticeSpec

    def __post_init__(self):
        if len(self.values) != len(self.index):
            raise ShapeError(
                f'Vector has {len(self.values)} values for {len(self.index)} indices')

    @classmethod
    def from_labels(cls, lattice: LatticeSpec, index: IndexSet,
                    labels: Sequence[LabelLike]) -> FuzzyVector:
        """
        :raises FormatError: If a label is not in the carrier.
        :raises ShapeError: If the number of labels does not match the index set.
        """
        return cls(index, tuple(lattice.index_of(label) for label in labels), lattice)

    @classmethod
    def diagonal(cls, lattice: LatticeSpec, index: IndexSet, d: int) -> FuzzyVector:
        """
        The constant vector d^I.
        """
        return cls(index, (d,) * len(index), lattice)

    @property
    def elements(self) -> List[Element]:
        return [Element(v) for v in self.values]

    def labels(self) -> List[str]:
        return [self.lattice.label_of(v) for v in self.values]

    def __getitem__(self, name: str) -> Element:
        return Element(self.values[self.index.position(name)])

    def __le__(self, other: FuzzyVector) -> bool:
        return VectorAlgebra(self.lattice, len(self.index)).leq(self.values, other.values)

    def __str__(self) -> str:
        return self.lattice.format_values(self.values)


class VectorAlgebra:
    """
    Pointwise operations on index tuples of a fixed length over one lattice.
    """

    def __init__(self, lattice: LatticeSpec, length: int):
        """
        :param lattice: Carrier lattice.
        :param length: Number of coordinates.
        """
        self.lattice = lattice
        self.length = length

    def __repr__(self):
        return f'VectorAlgebra(size={self.lattice.size}, length={self.length})'

    @property
    def top(self) -> Values:
        return (self.lattice.top,) * self.length

    @property
    def bottom(self) -> Values:
        return (self.lattice.bottom,) * self.length

    def diagonal(self, d: int) -> Values:
        return (d,) * self.length

    def all_vectors(self, budget: Optional[int] = None) -> List[Values]:
        """
        All vectors in canonical order.

        :raises BudgetExceededError: If |A|^length exceeds the budget.
        """
        return list(enumerate_values(self.lattice.size, self.length, budget))

    def rank(self, values: Values) -> int:
        return rank_of(values, self.lattice.size)

    def leq(self, x: Values, y: Values) -> bool:
        leq = self.lattice.leq
        return all(leq(a, b) for a, b in zip(x, y))

    def meet(self, x: Values, y: Values) -> Values:
        table = self.lattice.meet_table
        return tuple(table[a][b] for a, b in zip(x, y))

    def join(self, x: Values, y: Values) -> Values:
        table = self.lattice.join_table
        return tuple(table[a][b] for a, b in zip(x, y))

    def mul(self, x: Values, y: Values) -> Values:
        table = self.lattice.prod_table
        return tuple(table[a][b] for a, b in zip(x, y))

    def impl(self, x: Values, y: Values) -> Values:
        table = self.lattice.impl_table
        return tuple(table[a][b] for a, b in zip(x, y))

    def oplus(self, x: Values, y: Values) -> Values:
        oplus = self.lattice.oplus
        return tuple(oplus(a, b) for a, b in zip(x, y))

    def neg(self, x: Values) -> Values:
        neg = self.lattice.neg
        return tuple(neg(a) for a in x)

    def scale(self, d: int, x: Values) -> Values:
        """
        d^I * x.
        """
        table = self.lattice.prod_table[d]
        return tuple(table[a] for a in x)

    def shift(self, d: int, x: Values) -> Values:
        """
        d^I -> x.
        """
        table = self.lattice.impl_table[d]
        return tuple(table[a] for a in x)

    def meet_all(self, vectors: Iterable[Values]) -> Values:
        result = self.top
        for vector in vectors:
            result = self.meet(result, vector)
        return result

    def join_all(self, vectors: Iterable[Values]) -> Values:
        result = self.bottom
        for vector in vectors:
            result = self.join(result, vector)
        return result

    def format(self, values: Values) -> str:
        return self.lattice.format_values(values)


def unit_vector(lattice: LatticeSpec, length: int, position: int) -> Values:
    """
    The crisp vector that is 1 at the given position and 0 elsewhere.
    """
    return tuple(lattice.top if k == position else lattice.bottom for k in range(length))


def iter_pairs(vectors: Sequence[Values]) -> Iterator[Tuple[Values, Values]]:
    for x in vectors:
        for y in vectors:
            yield x, y
