"""
Fuzzy binary relations between finite index sets.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple

from .errors import FormatError, ShapeError
from .lattice import LabelLike, LatticeSpec
from .sweep import check_budget, first_violation

logger = logging.getLogger(__name__)

SQUARE_PROPERTIES = ('reflexive', 'symmetric', 'transitive')


@dataclass(frozen=True)
class IndexSet:
    """
    A finite, ordered set of distinct names (objects, attributes, time points).
    """
    names: Tuple[str, ...]

    def __init__(self, names: Iterable[str]):
        """
        :param names: Distinct, non-empty collection of names.
        :raises FormatError: If the collection is empty or contains duplicates.
        """
        names = tuple(str(name) for name in names)
        if not names:
            raise FormatError('An index set must not be empty')
        if len(set(names)) != len(names):
            duplicates = sorted({name for name in names if names.count(name) > 1})
            raise FormatError(f'Duplicate index names: {", ".join(duplicates)}')
        object.__setattr__(self, 'names', names)

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    @cached_property
    def _positions(self) -> Dict[str, int]:
        return {name: pos for pos, name in enumerate(self.names)}

    def position(self, name: str) -> int:
        """
        :raises FormatError: If the name is not part of the index set.
        """
        try:
            return self._positions[name]
        except KeyError as error:
            raise FormatError(f'Unknown index name "{name}"') from error


@dataclass(frozen=True)
class FuzzyRelation:
    """
    A total map domain x codomain -> carrier, stored as a dense table of element indices.
    """
    domain: IndexSet
    codomain: IndexSet
    values: Tuple[Tuple[int, ...], ...]
    lattice: LatticeSpec

    def __post_init__(self):
        if len(self.values) != len(self.domain) \
                or any(len(row) != len(self.codomain) for row in self.values):
            raise ShapeError(
                f'Relation table must be {len(self.domain)}x{len(self.codomain)}')
        if any(not 0 <= v < self.lattice.size for row in self.values for v in row):
            raise FormatError('Relation entries must be carrier indices')

    @property
    def is_square(self) -> bool:
        return self.domain == self.codomain

    def value(self, i: str, j: str) -> int:
        return self.values[self.domain.position(i)][self.codomain.position(j)]

    def label(self, i: str, j: str) -> str:
        return self.lattice.label_of(self.value(i, j))

    def to_json(self) -> dict:
        return {
            'domain': list(self.domain.names),
            'codomain': list(self.codomain.names),
            'entries': [
                {'i': i, 'j': j, 'v': self.lattice.label_of(self.values[p][q])}
                for p, i in enumerate(self.domain.names)
                for q, j in enumerate(self.codomain.names)
            ],
        }


@dataclass
class RelationReport:
    """
    Structural properties of a relation. Square-only properties are None for non-square
    relations.
    """
    boolean_valued: bool
    reflexive: Optional[bool] = None
    symmetric: Optional[bool] = None
    transitive: Optional[bool] = None
    witnesses: Dict[str, Tuple[str, ...]] = field(default_factory=dict)

    @property
    def fuzzy_equivalence(self) -> Optional[bool]:
        if self.reflexive is None or self.symmetric is None or self.transitive is None:
            return None
        return self.reflexive and self.symmetric and self.transitive

    def to_json(self) -> dict:
        return {
            'boolean_valued': self.boolean_valued,
            'reflexive': self.reflexive,
            'symmetric': self.symmetric,
            'transitive': self.transitive,
            'fuzzy_equivalence': self.fuzzy_equivalence,
            'witnesses': {law: list(witness) for law, witness in self.witnesses.items()},
        }


def build_relation(lattice: LatticeSpec, domain: IndexSet, codomain: IndexSet,
                   entries: Iterable[Tuple[str, str, LabelLike]] = ()) -> FuzzyRelation:
    """
    Builds a dense relation; unspecified pairs default to the bottom element.

    :param lattice: Owning lattice.
    :param domain: Row index set.
    :param codomain: Column index set.
    :param entries: (i, j, label) triples.
    :raises FormatError: If an index name or label is unknown.
    """
    table = [[lattice.bottom] * len(codomain) for _ in domain]
    for i, j, label in entries:
        table[domain.position(i)][codomain.position(j)] = lattice.index_of(label)
    return FuzzyRelation(domain, codomain, tuple(tuple(row) for row in table), lattice)


def relation_from_values(lattice: LatticeSpec, domain: IndexSet, codomain: IndexSet,
                         values: Sequence[Sequence[int]]) -> FuzzyRelation:
    return FuzzyRelation(domain, codomain, tuple(tuple(row) for row in values), lattice)


def transpose(relation: FuzzyRelation) -> FuzzyRelation:
    """
    The inverse relation R^-1(j, i) = R(i, j).
    """
    return FuzzyRelation(
        domain=relation.codomain,
        codomain=relation.domain,
        values=tuple(zip(*relation.values)),
        lattice=relation.lattice,
    )


def all_relations(lattice: LatticeSpec, domain: IndexSet, codomain: IndexSet,
                  budget: Optional[int] = None) -> Iterator[FuzzyRelation]:
    """
    Enumerates every relation of the given shape, row-major and lexicographic by index.

    :raises BudgetExceededError: If |A|^(|domain|*|codomain|) exceeds the budget.
    """
    cols = len(codomain)
    cells = len(domain) * cols
    check_budget(lattice.size, cells, budget)
    for flat in itertools.product(lattice.elements(), repeat=cells):
        rows = tuple(flat[r * cols:(r + 1) * cols] for r in range(len(domain)))
        yield FuzzyRelation(domain, codomain, rows, lattice)


def relation_properties(relation: FuzzyRelation,
                        properties: Optional[Iterable[str]] = None) -> RelationReport:
    """
    Decides reflexivity R(i,i)=1, symmetry R(i,j)=R(j,i), transitivity
    R(i,j)*R(j,k) <= R(i,k) and whether all entries are 0 or 1.

    :param relation: Relation to inspect.
    :param properties: Square-only properties to evaluate. By default all of them for square
        relations and none otherwise.
    :raises ShapeError: If a square-only property is requested for a non-square relation.
    """
    lattice = relation.lattice
    values = relation.values
    if properties is None:
        requested = set(SQUARE_PROPERTIES) if relation.is_square else set()
    else:
        requested = set(properties)
        unknown = requested - set(SQUARE_PROPERTIES)
        if unknown:
            raise FormatError(f'Unknown relation properties: {", ".join(sorted(unknown))}')
        if requested and not relation.is_square:
            raise ShapeError(
                f'{", ".join(sorted(requested))} requires domain = codomain')

    names_i = relation.domain.names
    names_j = relation.codomain.names
    witnesses = {}

    def record(law, witness, names):
        if witness is not None:
            witnesses[law] = tuple(name[w] for name, w in zip(names, witness))
        return witness is None

    cells = list(itertools.product(range(len(names_i)), range(len(names_j))))
    boolean_valued = record(
        'boolean_valued',
        first_violation('boolean_valued', cells,
                        lambda i, j: values[i][j] in (lattice.bottom, lattice.top)),
        (names_i, names_j))

    report = RelationReport(boolean_valued=boolean_valued, witnesses=witnesses)
    n = len(names_i)
    if 'reflexive' in requested:
        report.reflexive = record(
            'reflexive',
            first_violation('reflexive', ((i,) for i in range(n)),
                            lambda i: values[i][i] == lattice.top),
            (names_i,))
    if 'symmetric' in requested:
        report.symmetric = record(
            'symmetric',
            first_violation('symmetric', itertools.product(range(n), repeat=2),
                            lambda i, j: values[i][j] == values[j][i]),
            (names_i, names_i))
    if 'transitive' in requested:
        report.transitive = record(
            'transitive',
            first_violation('transitive', itertools.product(range(n), repeat=3),
                            lambda i, j, k: lattice.leq(
                                lattice.mul(values[i][j], values[j][k]), values[i][k])),
            (names_i, names_i, names_i))
    return report
