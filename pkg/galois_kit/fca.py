"""
Fuzzy formal concept analysis: contexts, derivation operators, concept enumeration and export
of the concept lattice.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

import networkx as nx

from .errors import LawViolationError, ShapeError
from .lattice import LatticeSpec
from .operator import DecompositionMode, InducedKind, OperatorTable, decompose_operator, \
    induced_values
from .relation import FuzzyRelation, IndexSet
from .sweep import Values, enumerate_values, first_violation, rank_of
from .vector import FuzzyVector, VectorAlgebra

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FuzzyContext:
    """
    A context (G, M, I) with a fuzzy incidence I: G x M -> A.
    """
    objects: IndexSet
    attributes: IndexSet
    incidence: FuzzyRelation

    def __post_init__(self):
        if self.incidence.domain != self.objects or self.incidence.codomain != self.attributes:
            raise ShapeError('Incidence must be a relation objects x attributes')

    @classmethod
    def from_relation(cls, incidence: FuzzyRelation) -> FuzzyContext:
        return cls(incidence.domain, incidence.codomain, incidence)

    @property
    def lattice(self) -> LatticeSpec:
        return self.incidence.lattice


class DerivationSide(Enum):
    OBJECTS_TO_ATTRS = 'objects_to_attrs'
    ATTRS_TO_OBJECTS = 'attrs_to_objects'


def _derive_values(ctx: FuzzyContext, side: DerivationSide, values: Values) -> Values:
    kind = InducedKind.DELTA if side is DerivationSide.OBJECTS_TO_ATTRS else InducedKind.EPSILON
    return induced_values(kind, ctx.incidence, values)


def derive(ctx: FuzzyContext, side: DerivationSide, x: FuzzyVector) -> FuzzyVector:
    """
    d(x)(m) = meet_g (x(g) -> I(g,m)) for objects_to_attrs and
    h(y)(g) = meet_m (y(m) -> I(g,m)) for attrs_to_objects.

    :raises ShapeError: If x is not indexed by the source set of the side.
    """
    source, target = (ctx.objects, ctx.attributes) \
        if side is DerivationSide.OBJECTS_TO_ATTRS else (ctx.attributes, ctx.objects)
    if x.index != source or x.lattice != ctx.lattice:
        raise ShapeError(f'Vector does not match the source of {side.value}')
    return FuzzyVector(target, _derive_values(ctx, side, x.values), ctx.lattice)


def derivation_pair(ctx: FuzzyContext,
                    budget: Optional[int] = None) -> Tuple[OperatorTable, OperatorTable]:
    """
    Tabulates (d, h), a reversing Galois connection between A^G and A^M.
    """
    d = OperatorTable.from_function(
        ctx.lattice, ctx.objects, ctx.attributes,
        lambda x: _derive_values(ctx, DerivationSide.OBJECTS_TO_ATTRS, x), budget)
    h = OperatorTable.from_function(
        ctx.lattice, ctx.attributes, ctx.objects,
        lambda y: _derive_values(ctx, DerivationSide.ATTRS_TO_OBJECTS, y), budget)
    return d, h


@dataclass(frozen=True)
class Concept:
    extent: FuzzyVector
    intent: FuzzyVector

    def label(self) -> str:
        return f'{self.extent}|{self.intent}'

    def to_json(self) -> dict:
        return {
            'extent': dict(zip(self.extent.index.names, self.extent.labels())),
            'intent': dict(zip(self.intent.index.names, self.intent.labels())),
        }


@dataclass
class ConceptSet:
    """
    Concepts sorted by extent in canonical order, ordered by extent inclusion.
    """
    concepts: List[Concept]
    order: List[Tuple[int, int]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.concepts)

    def leq(self, first: int, second: int) -> bool:
        return first == second or (first, second) in self.order

    def to_networkx(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(len(self.concepts)))
        graph.add_edges_from(self.order)
        return graph

    def cover_edges(self) -> List[Tuple[int, int]]:
        """
        Edges of the Hasse diagram, from the smaller to the larger concept.
        """
        return sorted(nx.transitive_reduction(self.to_networkx()).edges())

    def to_json(self) -> dict:
        return {
            'concepts': [concept.to_json() for concept in self.concepts],
            'edges': [list(edge) for edge in self.cover_edges()],
        }


def enumerate_concepts(ctx: FuzzyContext, budget: Optional[int] = None) -> ConceptSet:
    """
    All concepts (hd(x), d(x)) for x in A^G, deduplicated and sorted by extent.

    :raises BudgetExceededError: If |A|^|G| exceeds the budget.
    """
    lattice = ctx.lattice
    found: Dict[Values, Values] = {}
    for x in enumerate_values(lattice.size, len(ctx.objects), budget):
        intent = _derive_values(ctx, DerivationSide.OBJECTS_TO_ATTRS, x)
        extent = _derive_values(ctx, DerivationSide.ATTRS_TO_OBJECTS, intent)
        found.setdefault(extent, intent)

    extents = sorted(found, key=lambda extent: rank_of(extent, lattice.size))
    concepts = [Concept(FuzzyVector(ctx.objects, extent, lattice),
                        FuzzyVector(ctx.attributes, found[extent], lattice))
                for extent in extents]
    alg = VectorAlgebra(lattice, len(ctx.objects))
    order = [(a, b) for a, first in enumerate(extents) for b, second in enumerate(extents)
             if a != b and alg.leq(first, second)]
    logger.debug('Found %d concepts', len(concepts))
    return ConceptSet(concepts, order)


class ExportFormat(Enum):
    DOT = 'dot'
    JSON = 'json'


def _dot(concepts: ConceptSet) -> str:
    lines = ['digraph concepts {', '\tnode [shape=box];']
    for number, concept in enumerate(concepts.concepts):
        lines.append(f'\tc{number} [label="{concept.label()}"];')
    for lower, upper in concepts.cover_edges():
        lines.append(f'\tc{lower} -> c{upper};')
    lines.append('}')
    return '\n'.join(lines) + '\n'


def export_lattice(concepts: ConceptSet, export_format: ExportFormat) -> str:
    """
    Renders the Hasse diagram of the concept lattice as DOT or JSON. Identical concept sets
    render to identical text.
    """
    if export_format is ExportFormat.DOT:
        return _dot(concepts)
    return json.dumps(concepts.to_json(), sort_keys=True, indent=2) + '\n'


def context_from_closure(op: OperatorTable, budget: Optional[int] = None) -> FuzzyContext:
    """
    Builds a context whose closure h d reproduces a closure operator with the scalar law.

    :raises NotDecomposableError: If op is not such a closure operator.
    :raises LawViolationError: If h d differs from op.
    """
    relation, _ = decompose_operator(op, DecompositionMode.CLOSURE, budget)
    ctx = FuzzyContext.from_relation(relation)
    alg = op.in_algebra

    def closes(x):
        intent = _derive_values(ctx, DerivationSide.OBJECTS_TO_ATTRS, x)
        return _derive_values(ctx, DerivationSide.ATTRS_TO_OBJECTS, intent) == op.apply(x)

    witness = first_violation('context closure', ((x,) for x in op.inputs()), closes)
    if witness is not None:
        raise LawViolationError('context closure', (alg.format(witness[0]),),
                                'Context closure does not reproduce the operator')
    return ctx
