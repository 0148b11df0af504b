"""
Operators induced by fuzzy relations, Galois connections between A^I and A^J, recovery of
inducing relations and closure/interior decompositions.

Operators are extensional: an `OperatorTable` stores one output vector per input vector in the
canonical enumeration order of `galois_kit.sweep`.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, List, Optional, Set, Tuple

from .errors import LawViolationError, NotAdjointableError, NotDecomposableError, \
    PreconditionError, ShapeError
from .lattice import LatticeSpec, require_mv
from .relation import FuzzyRelation, IndexSet, all_relations, relation_from_values, \
    relation_properties, transpose
from .sweep import Values, check_budget, first_violation
from .vector import FuzzyVector, VectorAlgebra, iter_pairs, unit_vector

logger = logging.getLogger(__name__)


class InducedKind(Enum):
    """
    The four operators induced by a relation R: I x J -> A.
    """

    PHI = 'phi'
    RHO = 'rho'
    DELTA = 'delta'
    EPSILON = 'epsilon'


class ProvenanceKind(Enum):
    """
    Where the table of an operator came from.
    """

    INDUCED_PHI = 'induced_phi'
    INDUCED_RHO = 'induced_rho'
    INDUCED_DELTA = 'induced_delta'
    INDUCED_EPSILON = 'induced_epsilon'
    EXPLICIT = 'explicit'


_PROVENANCE_BY_KIND = {
    InducedKind.PHI: ProvenanceKind.INDUCED_PHI,
    InducedKind.RHO: ProvenanceKind.INDUCED_RHO,
    InducedKind.DELTA: ProvenanceKind.INDUCED_DELTA,
    InducedKind.EPSILON: ProvenanceKind.INDUCED_EPSILON,
}


@dataclass(frozen=True)
class OperatorTable:
    """
    An explicit map A^in -> A^out. Equality compares the tables only, not the provenance.
    """
    in_index: IndexSet
    out_index: IndexSet
    lattice: LatticeSpec
    table: Tuple[Values, ...]
    provenance: ProvenanceKind = field(default=ProvenanceKind.EXPLICIT, compare=False)
    source: Optional[FuzzyRelation] = field(default=None, compare=False)

    def __post_init__(self):
        rows = self.lattice.size ** len(self.in_index)
        if len(self.table) != rows:
            raise ShapeError(f'Operator table needs {rows} rows, got {len(self.table)}')
        width = len(self.out_index)
        for row in self.table:
            if len(row) != width or any(not 0 <= v < self.lattice.size for v in row):
                raise ShapeError(f'Operator output {row} is not a vector of length {width}')

    @property
    def in_algebra(self) -> VectorAlgebra:
        return VectorAlgebra(self.lattice, len(self.in_index))

    @property
    def out_algebra(self) -> VectorAlgebra:
        return VectorAlgebra(self.lattice, len(self.out_index))

    @property
    def is_endo(self) -> bool:
        return self.in_index == self.out_index

    def inputs(self) -> List[Values]:
        return list(itertools.product(self.lattice.elements(), repeat=len(self.in_index)))

    def apply(self, values: Values) -> Values:
        return self.table[self.in_algebra.rank(values)]

    def __call__(self, x: FuzzyVector) -> FuzzyVector:
        if x.index != self.in_index or x.lattice != self.lattice:
            raise ShapeError('Vector does not match the operator domain')
        return FuzzyVector(self.out_index, self.apply(x.values), self.lattice)

    def image(self) -> Set[Values]:
        return set(self.table)

    def fixpoints(self) -> Set[Values]:
        if not self.is_endo:
            raise ShapeError('Fixpoints require an endo operator')
        return {x for x, y in zip(self.inputs(), self.table) if x == y}

    def negated(self) -> OperatorTable:
        """
        The conjugate x -> not op(not x).
        """
        neg_in, neg_out = self.in_algebra.neg, self.out_algebra.neg
        return OperatorTable(
            self.in_index, self.out_index, self.lattice,
            tuple(neg_out(self.apply(neg_in(x))) for x in self.inputs()))

    def then(self, outer: OperatorTable) -> OperatorTable:
        """
        The composite x -> outer(self(x)).
        """
        if outer.in_index != self.out_index or outer.lattice != self.lattice:
            raise ShapeError('Operators cannot be composed')
        return OperatorTable(self.in_index, outer.out_index, self.lattice,
                             tuple(outer.apply(y) for y in self.table))

    @classmethod
    def from_function(cls, lattice: LatticeSpec, in_index: IndexSet, out_index: IndexSet,
                      function: Callable[[Values], Values], budget: Optional[int] = None,
                      provenance: ProvenanceKind = ProvenanceKind.EXPLICIT,
                      source: Optional[FuzzyRelation] = None) -> OperatorTable:
        """
        Tabulates a function on index tuples.

        :raises BudgetExceededError: If |A|^|in_index| exceeds the budget.
        """
        check_budget(lattice.size, len(in_index), budget)
        inputs = itertools.product(lattice.elements(), repeat=len(in_index))
        return cls(in_index, out_index, lattice, tuple(tuple(function(x)) for x in inputs),
                   provenance, source)

    @classmethod
    def identity(cls, lattice: LatticeSpec, index: IndexSet,
                 budget: Optional[int] = None) -> OperatorTable:
        return cls.from_function(lattice, index, index, lambda x: x, budget)

    @classmethod
    def constant(cls, lattice: LatticeSpec, in_index: IndexSet, out_index: IndexSet,
                 value: int, budget: Optional[int] = None) -> OperatorTable:
        output = (value,) * len(out_index)
        return cls.from_function(lattice, in_index, out_index, lambda x: output, budget)

    def to_json(self) -> dict:
        fmt = self.lattice.label_of
        return {
            'in_index': list(self.in_index.names),
            'out_index': list(self.out_index.names),
            'provenance': self.provenance.value,
            'outputs': [[fmt(v) for v in row] for row in self.table],
        }


def _require_relation_vector(relation: FuzzyRelation, index: IndexSet,
                             x: FuzzyVector) -> None:
    if x.lattice != relation.lattice:
        raise ShapeError('Vector and relation live over different lattices')
    if x.index != index:
        raise ShapeError('Vector is indexed by the wrong index set')


def induced_values(kind: InducedKind, relation: FuzzyRelation, values: Values) -> Values:
    """
    Evaluates phi_R, rho_R, delta_R or epsilon_R on an index tuple.
    """
    lattice = relation.lattice
    rows = relation.values
    impl, mul = lattice.impl, lattice.mul
    n_i, n_j = len(relation.domain), len(relation.codomain)
    if kind is InducedKind.PHI:
        return tuple(lattice.meet_all(impl(rows[i][j], values[i]) for i in range(n_i))
                     for j in range(n_j))
    if kind is InducedKind.RHO:
        return tuple(lattice.join_all(mul(rows[i][j], values[j]) for j in range(n_j))
                     for i in range(n_i))
    if kind is InducedKind.DELTA:
        return tuple(lattice.meet_all(impl(values[i], rows[i][j]) for i in range(n_i))
                     for j in range(n_j))
    return tuple(lattice.meet_all(impl(values[j], rows[i][j]) for j in range(n_j))
                 for i in range(n_i))


def _induced_shape(kind: InducedKind, relation: FuzzyRelation) -> Tuple[IndexSet, IndexSet]:
    if kind in (InducedKind.PHI, InducedKind.DELTA):
        return relation.domain, relation.codomain
    return relation.codomain, relation.domain


def apply_induced(kind: InducedKind, relation: FuzzyRelation, x: FuzzyVector) -> FuzzyVector:
    """
    Applies an induced operator to a vector:

    phi_R(x)(j) = meet_i (R(i,j) -> x(i)),   rho_R(y)(i) = join_j (R(i,j) * y(j)),
    delta_R(x)(j) = meet_i (x(i) -> R(i,j)), epsilon_R(y)(i) = meet_j (y(j) -> R(i,j)).

    :raises ShapeError: If the vector is indexed by the wrong set or lattice.
    """
    source, target = _induced_shape(kind, relation)
    _require_relation_vector(relation, source, x)
    return FuzzyVector(target, induced_values(kind, relation, x.values), relation.lattice)


def induced_table(kind: InducedKind, relation: FuzzyRelation,
                  budget: Optional[int] = None) -> OperatorTable:
    """
    Tabulates an induced operator.

    :raises BudgetExceededError: If the input space exceeds the budget.
    """
    source, target = _induced_shape(kind, relation)
    return OperatorTable.from_function(
        relation.lattice, source, target, lambda x: induced_values(kind, relation, x),
        budget, _PROVENANCE_BY_KIND[kind], relation)


def _require_pair(f: OperatorTable, g: OperatorTable) -> None:
    if f.lattice != g.lattice:
        raise ShapeError('Operators live over different lattices')
    if f.in_index != g.out_index or f.out_index != g.in_index:
        raise ShapeError('The second operator must map back into the domain of the first')


def _fmt(op_algebra: VectorAlgebra, *vectors: Values) -> Tuple[str, ...]:
    return tuple(op_algebra.format(v) for v in vectors)


def _is_monotone(op: OperatorTable) -> Optional[Tuple[Values, Values]]:
    leq_in, leq_out = op.in_algebra.leq, op.out_algebra.leq
    return first_violation('monotone', iter_pairs(op.inputs()),
                           lambda x, y: not leq_in(x, y) or leq_out(op.apply(x), op.apply(y)))


def _is_antitone(op: OperatorTable) -> Optional[Tuple[Values, Values]]:
    leq_in, leq_out = op.in_algebra.leq, op.out_algebra.leq
    return first_violation('antitone', iter_pairs(op.inputs()),
                           lambda x, y: not leq_in(x, y) or leq_out(op.apply(y), op.apply(x)))


@dataclass
class GaloisReport:
    """
    Results of the (reversed) adjointness biconditional and the unit/counit inequalities.
    """
    reversed: bool
    adjointness: bool
    unit_counit: bool
    f_order: bool
    g_order: bool
    witnesses: Dict[str, Tuple[str, ...]] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.adjointness and self.unit_counit

    @property
    def consistent(self) -> bool:
        """
        The biconditional and the unit/counit form agree for maps of the right order type.
        """
        return self.adjointness == (self.unit_counit and self.f_order and self.g_order)

    def to_json(self) -> dict:
        return {
            'reversed': self.reversed,
            'adjointness': self.adjointness,
            'unit_counit': self.unit_counit,
            'f_order': self.f_order,
            'g_order': self.g_order,
            'holds': self.holds,
            'consistent': self.consistent,
            'witnesses': {law: list(w) for law, w in self.witnesses.items()},
        }


def verify_galois(f: OperatorTable, g: OperatorTable, reversed: bool = False) -> GaloisReport:
    """
    Checks x <= f(y) iff g(x) <= y (or x <= d(y) iff y <= h(x) when reversed) for all
    x in A^J and y in A^I, and independently gf(y) <= y, x <= fg(x) (or y <= hd(y),
    x <= dh(x)).

    :param f: Map A^I -> A^J (the upper adjoint, or d for reversed connections).
    :param g: Map A^J -> A^I (the lower adjoint, or h for reversed connections).
    :param reversed: True for the contravariant form.
    :raises ShapeError: If the operators do not form a pair A^I <-> A^J.
    """
    _require_pair(f, g)
    alg_i, alg_j = f.in_algebra, f.out_algebra
    xs, ys = g.inputs(), f.inputs()
    pairs = [(x, y) for x in xs for y in ys]
    witnesses = {}
    logger.debug('Checking %s Galois connection on %d pairs',
                 'reversed' if reversed else 'covariant', len(pairs))

    if reversed:
        adjoint = first_violation(
            'adjointness', pairs,
            lambda x, y: alg_j.leq(x, f.apply(y)) == alg_i.leq(y, g.apply(x)))
        unit = first_violation('unit', ((y,) for y in ys),
                               lambda y: alg_i.leq(y, g.apply(f.apply(y))))
        counit = first_violation('counit', ((x,) for x in xs),
                                 lambda x: alg_j.leq(x, f.apply(g.apply(x))))
        f_order, g_order = _is_antitone(f), _is_antitone(g)
    else:
        adjoint = first_violation(
            'adjointness', pairs,
            lambda x, y: alg_j.leq(x, f.apply(y)) == alg_i.leq(g.apply(x), y))
        unit = first_violation('unit', ((y,) for y in ys),
                               lambda y: alg_i.leq(g.apply(f.apply(y)), y))
        counit = first_violation('counit', ((x,) for x in xs),
                                 lambda x: alg_j.leq(x, f.apply(g.apply(x))))
        f_order, g_order = _is_monotone(f), _is_monotone(g)

    if adjoint is not None:
        witnesses['adjointness'] = (alg_j.format(adjoint[0]), alg_i.format(adjoint[1]))
    if unit is not None:
        witnesses['unit'] = _fmt(alg_i, *unit)
    if counit is not None:
        witnesses['counit'] = _fmt(alg_j, *counit)
    if f_order is not None:
        witnesses['f_order'] = _fmt(alg_i, *f_order)
    if g_order is not None:
        witnesses['g_order'] = _fmt(alg_j, *g_order)

    return GaloisReport(
        reversed=reversed,
        adjointness=adjoint is None,
        unit_counit=unit is None and counit is None,
        f_order=f_order is None,
        g_order=g_order is None,
        witnesses=witnesses,
    )


class TypeClass(Enum):
    """
    Mapping types characterizing the relation-induced operators.
    """

    PHI_TYPE = 'phi_type'
    RHO_TYPE = 'rho_type'
    DELTA_TYPE = 'delta_type'
    NONE = 'none'


@dataclass
class MappingTypeReport:
    """
    Order and diagonal-scalar laws of an operator.

    On finite lattices every infimum is a finite meet or the empty meet (the top), so infima
    preservation is checked as op(1) = 1 plus binary meet preservation; suprema are handled
    dually.
    """
    monotone: bool
    antitone: bool
    infima_preserving: bool
    suprema_preserving: bool
    suprema_reversing: bool
    diag_impl_law: bool
    diag_prod_law: bool
    diag_mixed_law: bool
    witnesses: Dict[str, Tuple[str, ...]] = field(default_factory=dict)

    @property
    def is_phi_type(self) -> bool:
        return self.infima_preserving and self.diag_impl_law

    @property
    def is_rho_type(self) -> bool:
        return self.suprema_preserving and self.diag_prod_law

    @property
    def is_delta_type(self) -> bool:
        return self.suprema_reversing and self.diag_mixed_law

    @property
    def type_class(self) -> TypeClass:
        if self.is_phi_type:
            return TypeClass.PHI_TYPE
        if self.is_rho_type:
            return TypeClass.RHO_TYPE
        if self.is_delta_type:
            return TypeClass.DELTA_TYPE
        return TypeClass.NONE

    def to_json(self) -> dict:
        return {
            'monotone': self.monotone,
            'antitone': self.antitone,
            'infima_preserving': self.infima_preserving,
            'suprema_preserving': self.suprema_preserving,
            'suprema_reversing': self.suprema_reversing,
            'diag_impl_law': self.diag_impl_law,
            'diag_prod_law': self.diag_prod_law,
            'diag_mixed_law': self.diag_mixed_law,
            'is_phi_type': self.is_phi_type,
            'is_rho_type': self.is_rho_type,
            'is_delta_type': self.is_delta_type,
            'type_class': self.type_class.value,
            'witnesses': {law: list(w) for law, w in self.witnesses.items()},
        }


def classify_mapping(op: OperatorTable) -> MappingTypeReport:
    """
    Evaluates monotonicity, preservation/reversal of infima and suprema and the three
    diagonal laws d -> op(x) = op(d -> x), d * op(x) = op(d * x), d -> op(x) = op(d * x)
    over all vectors and scalars d.
    """
    alg_in, alg_out = op.in_algebra, op.out_algebra
    lattice = op.lattice
    apply = op.apply
    inputs = op.inputs()
    pairs = list(iter_pairs(inputs))
    scalars = [(d, x) for d in lattice.elements() for x in inputs]
    witnesses = {}

    def record(law, witness, formatter):
        if witness is not None:
            witnesses[law] = formatter(witness)
        return witness is None

    def pair_fmt(case):
        return _fmt(alg_in, *case)

    def holds_at(law, x, expected):
        return record(law, None if apply(x) == expected else (x,), pair_fmt)

    def scalar_fmt(case):
        return lattice.label_of(case[0]), alg_in.format(case[1])

    monotone = record('monotone', _is_monotone(op), pair_fmt)
    antitone = record('antitone', _is_antitone(op), pair_fmt)

    meets = first_violation('infima_preserving', pairs, lambda x, y: apply(
        alg_in.meet(x, y)) == alg_out.meet(apply(x), apply(y)))
    infima_preserving = record('infima_preserving', meets, pair_fmt) \
        and holds_at('infima_preserving', alg_in.top, alg_out.top)
    joins = first_violation('suprema_preserving', pairs, lambda x, y: apply(
        alg_in.join(x, y)) == alg_out.join(apply(x), apply(y)))
    suprema_preserving = record('suprema_preserving', joins, pair_fmt) \
        and holds_at('suprema_preserving', alg_in.bottom, alg_out.bottom)
    reversing = first_violation('suprema_reversing', pairs, lambda x, y: apply(
        alg_in.join(x, y)) == alg_out.meet(apply(x), apply(y)))
    suprema_reversing = record('suprema_reversing', reversing, pair_fmt) \
        and holds_at('suprema_reversing', alg_in.bottom, alg_out.top)

    diag_impl_law = record('diag_impl_law', first_violation(
        'diag_impl_law', scalars,
        lambda d, x: alg_out.shift(d, apply(x)) == apply(alg_in.shift(d, x))), scalar_fmt)
    diag_prod_law = record('diag_prod_law', first_violation(
        'diag_prod_law', scalars,
        lambda d, x: alg_out.scale(d, apply(x)) == apply(alg_in.scale(d, x))), scalar_fmt)
    diag_mixed_law = record('diag_mixed_law', first_violation(
        'diag_mixed_law', scalars,
        lambda d, x: alg_out.shift(d, apply(x)) == apply(alg_in.scale(d, x))), scalar_fmt)

    return MappingTypeReport(
        monotone=monotone,
        antitone=antitone,
        infima_preserving=infima_preserving,
        suprema_preserving=suprema_preserving,
        suprema_reversing=suprema_reversing,
        diag_impl_law=diag_impl_law,
        diag_prod_law=diag_prod_law,
        diag_mixed_law=diag_mixed_law,
        witnesses=witnesses,
    )


class AdjointDirection(Enum):
    """
    Role of the given operator in the Galois connection whose partner is computed.

    RIGHT_OF_MONOTONE: op is the infima-preserving upper map f, partner g(x) = meet{a | x <= f(a)}.
    LEFT_OF_MONOTONE: op is the suprema-preserving lower map g, partner f(x) = join{b | g(b) <= x}.
    REVERSED_PARTNER: op is the suprema-reversing map d, partner h(x) = join{a | x <= d(a)}.
    """

    RIGHT_OF_MONOTONE = 'right_of_monotone'
    LEFT_OF_MONOTONE = 'left_of_monotone'
    REVERSED_PARTNER = 'reversed_partner'


def compute_adjoint(op: OperatorTable, direction: AdjointDirection,
                    budget: Optional[int] = None) -> OperatorTable:
    """
    Constructs the unique Galois partner of an operator.

    :raises NotAdjointableError: If op lacks the required preservation property.
    :raises BudgetExceededError: If the partner's domain exceeds the budget.
    :raises LawViolationError: If the constructed pair fails the Galois check.
    """
    report = classify_mapping(op)
    alg_in = op.in_algebra
    inputs = op.inputs()
    if direction is AdjointDirection.RIGHT_OF_MONOTONE:
        if not (report.monotone and report.infima_preserving):
            raise NotAdjointableError(
                'Operator does not preserve infima',
                report.witnesses.get('infima_preserving', report.witnesses.get('monotone')))

        def partner(x):
            return alg_in.meet_all(a for a in inputs if op.out_algebra.leq(x, op.apply(a)))
    elif direction is AdjointDirection.LEFT_OF_MONOTONE:
        if not (report.monotone and report.suprema_preserving):
            raise NotAdjointableError(
                'Operator does not preserve suprema',
                report.witnesses.get('suprema_preserving', report.witnesses.get('monotone')))

        def partner(x):
            return alg_in.join_all(b for b in inputs if op.out_algebra.leq(op.apply(b), x))
    else:
        if not (report.antitone and report.suprema_reversing):
            raise NotAdjointableError(
                'Operator does not reverse suprema',
                report.witnesses.get('suprema_reversing', report.witnesses.get('antitone')))

        def partner(x):
            return alg_in.join_all(a for a in inputs if op.out_algebra.leq(x, op.apply(a)))

    adjoint = OperatorTable.from_function(op.lattice, op.out_index, op.in_index, partner, budget)
    if direction is AdjointDirection.LEFT_OF_MONOTONE:
        check = verify_galois(adjoint, op)
    else:
        check = verify_galois(op, adjoint, reversed=direction is AdjointDirection.REVERSED_PARTNER)
    if not check.holds:
        law, witness = next(iter(check.witnesses.items()))
        raise LawViolationError(law, witness, 'Constructed adjoint fails the Galois check')
    return adjoint


class RecoveryKind(Enum):
    """
    Which operator type a relation is recovered from.
    """

    FROM_PHI = 'from_phi'
    FROM_DELTA = 'from_delta'
    FROM_RHO = 'from_rho'


def _recover_phi(op: OperatorTable) -> FuzzyRelation:
    lattice = op.lattice
    inputs = op.inputs()
    rows = [[lattice.meet_all(lattice.impl(op.apply(a)[j], a[i]) for a in inputs)
             for j in range(len(op.out_index))] for i in range(len(op.in_index))]
    return relation_from_values(lattice, op.in_index, op.out_index, rows)


def _recover_delta(op: OperatorTable) -> FuzzyRelation:
    lattice = op.lattice
    inputs = op.inputs()
    rows = [[lattice.join_all(lattice.mul(op.apply(a)[j], a[i]) for a in inputs)
             for j in range(len(op.out_index))] for i in range(len(op.in_index))]
    return relation_from_values(lattice, op.in_index, op.out_index, rows)


def _recover_rho(op: OperatorTable) -> FuzzyRelation:
    lattice = op.lattice
    n_j = len(op.in_index)
    images = [op.apply(unit_vector(lattice, n_j, j)) for j in range(n_j)]
    rows = [[images[j][i] for j in range(n_j)] for i in range(len(op.out_index))]
    return relation_from_values(lattice, op.out_index, op.in_index, rows)


def recover_relation(op: OperatorTable, kind: RecoveryKind,
                     budget: Optional[int] = None) -> FuzzyRelation:
    """
    Recovers the relation inducing a phi-, delta- or rho-type operator:

    from_phi:   R(i,j) = meet_a (phi(a)(j) -> a(i)),
    from_delta: R(i,j) = join_a (delta(a)(j) * a(i)),
    from_rho:   R(i,j) = rho(chi_j)(i) for the crisp unit vectors chi_j; cross-checked against
                the from_phi recovery of the left adjoint.

    :raises PreconditionError: If op is not of the matching type.
    :raises LawViolationError: If the recovered relation does not induce op.
    :raises BudgetExceededError: If an enumeration exceeds the budget.
    """
    check_budget(op.lattice.size, len(op.in_index), budget)
    report = classify_mapping(op)
    if kind is RecoveryKind.FROM_PHI:
        if not report.is_phi_type:
            raise PreconditionError('Operator is not a phi-type mapping')
        relation = _recover_phi(op)
        induced = InducedKind.PHI
    elif kind is RecoveryKind.FROM_DELTA:
        if not report.is_delta_type:
            raise PreconditionError('Operator is not a delta-type mapping')
        relation = _recover_delta(op)
        induced = InducedKind.DELTA
    else:
        if not report.is_rho_type:
            raise PreconditionError('Operator is not a rho-type mapping')
        relation = _recover_rho(op)
        induced = InducedKind.RHO
        phi = compute_adjoint(op, AdjointDirection.LEFT_OF_MONOTONE, budget)
        if _recover_phi(phi) != relation:
            raise LawViolationError('rho-recovery', None,
                                    'Unit-vector recovery disagrees with the adjoint recovery')

    if induced_table(induced, relation, budget) != op:
        raise LawViolationError('representation', None,
                                f'Recovered relation does not induce the operator ({kind.value})')
    return relation


def inducing_relations(op: OperatorTable, kind: InducedKind,
                       budget: Optional[int] = None) -> List[FuzzyRelation]:
    """
    Brute force: every relation R with kind_R = op.

    :raises BudgetExceededError: If the number of candidate relations exceeds the budget.
    """
    domain, codomain = (op.in_index, op.out_index) \
        if kind in (InducedKind.PHI, InducedKind.DELTA) else (op.out_index, op.in_index)
    return [relation for relation in all_relations(op.lattice, domain, codomain, budget)
            if induced_table(kind, relation, budget) == op]


@dataclass
class ClosureReport:
    """
    Closure/interior properties of an endo operator and the scalar law d * op(x) <= op(d * x).
    """
    monotone: bool
    extensive: bool
    contractive: bool
    idempotent: bool
    scalar_law: bool
    witnesses: Dict[str, Tuple[str, ...]] = field(default_factory=dict)

    @property
    def is_closure(self) -> bool:
        return self.monotone and self.extensive and self.idempotent

    @property
    def is_interior(self) -> bool:
        return self.monotone and self.contractive and self.idempotent

    @property
    def has_scalar_law_closure(self) -> bool:
        return self.is_closure and self.scalar_law

    @property
    def has_scalar_law_interior(self) -> bool:
        return self.is_interior and self.scalar_law

    def to_json(self) -> dict:
        return {
            'monotone': self.monotone,
            'extensive': self.extensive,
            'contractive': self.contractive,
            'idempotent': self.idempotent,
            'scalar_law': self.scalar_law,
            'is_closure': self.is_closure,
            'is_interior': self.is_interior,
            'has_scalar_law_closure': self.has_scalar_law_closure,
            'has_scalar_law_interior': self.has_scalar_law_interior,
            'witnesses': {law: list(w) for law, w in self.witnesses.items()},
        }


def closure_interior_check(op: OperatorTable) -> ClosureReport:
    """
    Checks monotonicity, extensivity x <= op(x), contractivity op(x) <= x, idempotence and the
    scalar law d * op(x) <= op(d * x) for all d and x.

    :raises ShapeError: If the operator is not an endo operator.
    """
    if not op.is_endo:
        raise ShapeError('Closure and interior checks require in_index = out_index')
    alg = op.in_algebra
    apply = op.apply
    inputs = [(x,) for x in op.inputs()]
    witnesses = {}

    def record(law, witness, formatter=lambda case: _fmt(alg, *case)):
        if witness is not None:
            witnesses[law] = formatter(witness)
        return witness is None

    monotone = record('monotone', _is_monotone(op))
    extensive = record('extensive', first_violation(
        'extensive', inputs, lambda x: alg.leq(x, apply(x))))
    contractive = record('contractive', first_violation(
        'contractive', inputs, lambda x: alg.leq(apply(x), x)))
    idempotent = record('idempotent', first_violation(
        'idempotent', inputs, lambda x: apply(apply(x)) == apply(x)))
    scalars = [(d, x) for d in op.lattice.elements() for (x,) in inputs]
    scalar_law = record('scalar_law', first_violation(
        'scalar_law', scalars,
        lambda d, x: alg.leq(alg.scale(d, apply(x)), apply(alg.scale(d, x)))),
        lambda case: (op.lattice.label_of(case[0]), alg.format(case[1])))

    return ClosureReport(monotone, extensive, contractive, idempotent, scalar_law, witnesses)


class DecompositionMode(Enum):
    """
    Interior operators decompose as rho_R phi_R, closure operators as epsilon_R delta_R.
    """

    INTERIOR = 'interior'
    CLOSURE = 'closure'


def decompose_operator(op: OperatorTable, mode: DecompositionMode,
                       budget: Optional[int] = None) -> Tuple[FuzzyRelation, IndexSet]:
    """
    Expresses an interior (closure) operator with the scalar law as rho_R phi_R
    (epsilon_R delta_R). J enumerates the distinct images O(a) in canonical order and
    R(i, O(a)) = O(a)(i).

    :raises NotDecomposableError: If op is not of the requested kind or fails the scalar law.
    :raises LawViolationError: If the composite does not reproduce op.
    :return: The relation over I x J and the index set J.
    """
    report = closure_interior_check(op)
    alg = op.in_algebra
    if mode is DecompositionMode.INTERIOR:
        required = ('monotone', 'contractive', 'idempotent')
        outer, inner = InducedKind.RHO, InducedKind.PHI
    else:
        required = ('monotone', 'extensive', 'idempotent')
        outer, inner = InducedKind.EPSILON, InducedKind.DELTA
    for law in required:
        if not getattr(report, law):
            raise NotDecomposableError(f'Operator is not {law}', report.witnesses[law])
    if not report.scalar_law:
        raise NotDecomposableError('Scalar law d*O(x) <= O(d*x) fails',
                                   report.witnesses['scalar_law'])

    images = sorted(op.image(), key=alg.rank)
    index = IndexSet(alg.format(image) for image in images)
    rows = [[image[i] for image in images] for i in range(len(op.in_index))]
    relation = relation_from_values(op.lattice, op.in_index, index, rows)
    logger.debug('Decomposing %s operator through %d images', mode.value, len(images))

    witness = first_violation(
        'decomposition', ((x,) for x in op.inputs()),
        lambda x: induced_values(outer, relation,
                                 induced_values(inner, relation, x)) == op.apply(x))
    if witness is not None:
        raise LawViolationError('decomposition', _fmt(alg, *witness),
                                f'{mode.value} decomposition does not reproduce the operator')
    return relation, index


@dataclass
class ConjugateReport:
    """
    not phi_R not = rho_{R^-1} and not rho_R not = phi_{R^-1}.
    """
    phi_conjugate: bool
    rho_conjugate: bool
    witnesses: Dict[str, Tuple[str, ...]] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.phi_conjugate and self.rho_conjugate

    def to_json(self) -> dict:
        return {
            'phi_conjugate': self.phi_conjugate,
            'rho_conjugate': self.rho_conjugate,
            'holds': self.holds,
            'witnesses': {law: list(w) for law, w in self.witnesses.items()},
        }


def _first_difference(left: OperatorTable, right: OperatorTable) -> Optional[Tuple[str]]:
    for x, a, b in zip(left.inputs(), left.table, right.table):
        if a != b:
            return (left.in_algebra.format(x),)
    return None


def conjugate_check(relation: FuzzyRelation, budget: Optional[int] = None) -> ConjugateReport:
    """
    Compares the negation conjugates of phi_R and rho_R with the operators of the inverse
    relation as tables.

    :raises UnsupportedStructureError: If the lattice is not an MV-algebra.
    """
    require_mv(relation.lattice, 'conjugate_check')
    inverse = transpose(relation)
    phi_conj = induced_table(InducedKind.PHI, relation, budget).negated()
    rho_conj = induced_table(InducedKind.RHO, relation, budget).negated()
    witnesses = {}
    phi_diff = _first_difference(phi_conj, induced_table(InducedKind.RHO, inverse, budget))
    rho_diff = _first_difference(rho_conj, induced_table(InducedKind.PHI, inverse, budget))
    if phi_diff is not None:
        witnesses['phi_conjugate'] = phi_diff
    if rho_diff is not None:
        witnesses['rho_conjugate'] = rho_diff
    return ConjugateReport(phi_diff is None, rho_diff is None, witnesses)


@dataclass
class BooleanCriterionReport:
    """
    phi_R(x) * phi_R(y) <= phi_R(x * y) for all x, y compared with R being crisp.
    """
    submultiplicative: bool
    boolean_valued: bool
    witness: Optional[Tuple[str, ...]] = None

    @property
    def equivalent(self) -> bool:
        return self.submultiplicative == self.boolean_valued

    def to_json(self) -> dict:
        return {
            'submultiplicative': self.submultiplicative,
            'boolean_valued': self.boolean_valued,
            'equivalent': self.equivalent,
            'witness': list(self.witness) if self.witness else None,
        }


def boolean_criterion_check(relation: FuzzyRelation,
                            budget: Optional[int] = None) -> BooleanCriterionReport:
    """
    :raises UnsupportedStructureError: If the lattice is not an MV-algebra.
    :raises BudgetExceededError: If A^I exceeds the budget.
    """
    require_mv(relation.lattice, 'boolean_criterion_check')
    phi = induced_table(InducedKind.PHI, relation, budget)
    alg_i, alg_j = phi.in_algebra, phi.out_algebra
    witness = first_violation(
        'submultiplicative', iter_pairs(phi.inputs()),
        lambda x, y: alg_j.leq(alg_j.mul(phi.apply(x), phi.apply(y)), phi.apply(alg_i.mul(x, y))))
    return BooleanCriterionReport(
        submultiplicative=witness is None,
        boolean_valued=relation_properties(relation, properties=()).boolean_valued,
        witness=None if witness is None else _fmt(alg_i, *witness),
    )


@dataclass
class TypeTransferReport:
    """
    For a Galois pair the mapping types transfer: f phi-type iff g rho-type (covariant), or
    d delta-type iff h delta-type (reversed).
    """
    reversed: bool
    first_typed: bool
    second_typed: bool

    @property
    def agrees(self) -> bool:
        return self.first_typed == self.second_typed

    def to_json(self) -> dict:
        return {
            'reversed': self.reversed,
            'first_typed': self.first_typed,
            'second_typed': self.second_typed,
            'agrees': self.agrees,
        }


def type_transfer_check(f: OperatorTable, g: OperatorTable,
                        reversed: bool = False) -> TypeTransferReport:
    """
    :raises PreconditionError: If (f, g) is not a (reversed) Galois connection.
    """
    if not verify_galois(f, g, reversed).holds:
        raise PreconditionError('Operators do not form a Galois connection')
    first, second = classify_mapping(f), classify_mapping(g)
    if reversed:
        return TypeTransferReport(True, first.is_delta_type, second.is_delta_type)
    return TypeTransferReport(False, first.is_phi_type, second.is_rho_type)


@dataclass
class FixpointReport:
    """
    Closed (open) elements of the composites are exactly the images of the adjoints.
    """
    reversed: bool
    domain_composite_matches: bool
    codomain_composite_matches: bool
    domain_fixpoints: int
    codomain_fixpoints: int

    @property
    def holds(self) -> bool:
        return self.domain_composite_matches and self.codomain_composite_matches

    def to_json(self) -> dict:
        return {
            'reversed': self.reversed,
            'domain_composite_matches': self.domain_composite_matches,
            'codomain_composite_matches': self.codomain_composite_matches,
            'domain_fixpoints': self.domain_fixpoints,
            'codomain_fixpoints': self.codomain_fixpoints,
            'holds': self.holds,
        }


def closed_elements_check(f: OperatorTable, g: OperatorTable,
                          reversed: bool = False) -> FixpointReport:
    """
    Covariant: Fix(gf) = image(g) (gf interior on A^I) and Fix(fg) = image(f) (fg closure on
    A^J). Reversed: Fix(hd) = image(h) and Fix(dh) = image(d), both closures.

    :raises PreconditionError: If (f, g) is not a (reversed) Galois connection.
    """
    if not verify_galois(f, g, reversed).holds:
        raise PreconditionError('Operators do not form a Galois connection')
    on_domain = f.then(g)
    on_codomain = g.then(f)
    domain_fix = on_domain.fixpoints()
    codomain_fix = on_codomain.fixpoints()
    return FixpointReport(
        reversed=reversed,
        domain_composite_matches=domain_fix == g.image(),
        codomain_composite_matches=codomain_fix == f.image(),
        domain_fixpoints=len(domain_fix),
        codomain_fixpoints=len(codomain_fix),
    )
