"""
Tense and monadic operators over time frames.

A frame (T, R) induces G = phi_R and H = phi_{R^-1} on A^T; on MV-algebras the duals are
F = not G not and P = not H not. Monadic operators come from fuzzy equivalences as
exists = rho_R and forall = not exists not.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import PreconditionError, ShapeError, UnsupportedStructureError
from .lattice import LatticeSpec, is_boolean_algebra, require_mv
from .operator import InducedKind, OperatorTable, closure_interior_check, induced_table, \
    verify_galois
from .relation import FuzzyRelation, IndexSet, relation_properties, transpose
from .sweep import Values, first_violation
from .vector import iter_pairs

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TimeFrame:
    """
    A set of time points with a fuzzy accessibility relation.
    """
    times: IndexSet
    rel: FuzzyRelation

    def __post_init__(self):
        if self.rel.domain != self.times or self.rel.codomain != self.times:
            raise ShapeError('A frame relation must be square over its time points')

    @classmethod
    def from_relation(cls, relation: FuzzyRelation) -> TimeFrame:
        """
        :raises ShapeError: If the relation is not square.
        """
        return cls(relation.domain, relation)

    @property
    def lattice(self) -> LatticeSpec:
        return self.rel.lattice

    def transposed(self) -> TimeFrame:
        return TimeFrame(self.times, transpose(self.rel))


@dataclass
class TenseStructure:
    """
    Endo operators G and H on A^T; F and P are present on MV-algebras.
    """
    lattice: LatticeSpec
    G: OperatorTable
    H: OperatorTable
    F: Optional[OperatorTable] = None
    P: Optional[OperatorTable] = None

    def __post_init__(self):
        if not (self.G.is_endo and self.H.is_endo and self.G.in_index == self.H.in_index):
            raise ShapeError('G and H must be endo operators on the same A^T')

    def to_json(self) -> dict:
        result = {'G': self.G.to_json(), 'H': self.H.to_json()}
        if self.F is not None:
            result['F'] = self.F.to_json()
            result['P'] = self.P.to_json()
        return result


def tense_from_frame(frame: TimeFrame, budget: Optional[int] = None) -> TenseStructure:
    """
    :raises BudgetExceededError: If A^T exceeds the budget.
    """
    g_op = induced_table(InducedKind.PHI, frame.rel, budget)
    h_op = induced_table(InducedKind.PHI, transpose(frame.rel), budget)
    structure = TenseStructure(frame.lattice, g_op, h_op)
    if _is_mv(frame.lattice):
        structure.F = g_op.negated()
        structure.P = h_op.negated()
    return structure


def _is_mv(lattice: LatticeSpec) -> bool:
    try:
        require_mv(lattice, 'tense duals')
    except UnsupportedStructureError:
        return False
    return True


class AxiomSuite(Enum):
    BOOLEAN_B = 'boolean_B'
    MV_T = 'mv_T'
    PAVELKA_PT = 'pavelka_PT'
    MONADIC_NEW = 'monadic_new'
    MONADIC_ORIGINAL = 'monadic_original'


@dataclass
class AxiomReport:
    """
    Pass/fail per axiom with the first witness of each failure. Advisory entries are reported
    but do not count towards `passed`.
    """
    suite: AxiomSuite
    results: Dict[str, bool] = field(default_factory=dict)
    witnesses: Dict[str, Tuple[str, ...]] = field(default_factory=dict)
    advisory: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(ok for axiom, ok in self.results.items() if axiom not in self.advisory)

    def failed(self) -> List[str]:
        return [axiom for axiom, ok in self.results.items() if not ok]

    def to_json(self) -> dict:
        return {
            'suite': self.suite.value,
            'passed': self.passed,
            'results': dict(self.results),
            'advisory': list(self.advisory),
            'witnesses': {axiom: list(w) for axiom, w in self.witnesses.items()},
        }


class _AxiomChecker:
    """
    Evaluates named laws over sweeps and fills an AxiomReport.
    """

    def __init__(self, report: AxiomReport, op: OperatorTable):
        self.report = report
        self.lattice = op.lattice
        self.alg = op.in_algebra
        self.vectors = [(x,) for x in op.inputs()]
        self.pairs = list(iter_pairs(op.inputs()))
        self.scalars = [(r, x) for r in self.lattice.elements() for x, in self.vectors]

    def _format(self, value) -> str:
        if isinstance(value, tuple):
            return self.alg.format(value)
        return self.lattice.label_of(value)

    def check(self, axiom: str, cases: Sequence[Tuple], predicate: Callable[..., bool],
              label: Optional[str] = None) -> bool:
        if self.report.results.get(axiom) is False:
            return False
        witness = first_violation(axiom, cases, predicate)
        ok = witness is None
        self.report.results[axiom] = ok
        if not ok:
            prefix = (label,) if label else ()
            self.report.witnesses[axiom] = prefix + tuple(self._format(v) for v in witness)
        return ok

    def check_each(self, axiom: str, operators: Iterable[Tuple[str, OperatorTable]],
                   cases: Sequence[Tuple], predicate: Callable[..., bool]) -> bool:
        """
        Checks a law for each named operator; the first failing operator names the witness.
        """
        for name, op in operators:
            if not self.check(axiom, cases, lambda *case: predicate(op, *case), name):
                return False
        return True


def check_axioms(ts: TenseStructure, suite: AxiomSuite) -> AxiomReport:
    """
    Evaluates (B1)-(B3), (T1)-(T6) or (PT1)-(PT3) for both G and H over all vectors and, for
    (PT2), all carrier constants.

    :raises UnsupportedStructureError: If the lattice lacks the structure of the suite.
    :raises PreconditionError: If a monadic suite is requested.
    """
    lattice = ts.lattice
    if suite is AxiomSuite.BOOLEAN_B:
        if not is_boolean_algebra(lattice):
            raise UnsupportedStructureError('Suite boolean_B requires a Boolean algebra')
    elif suite in (AxiomSuite.MV_T, AxiomSuite.PAVELKA_PT):
        require_mv(lattice, f'suite {suite.value}')
    else:
        raise PreconditionError(f'Suite {suite.value} applies to monadic operators')

    report = AxiomReport(suite)
    checker = _AxiomChecker(report, ts.G)
    alg = checker.alg
    both = (('G', ts.G), ('H', ts.H))
    logger.debug('Checking suite %s on %d vectors', suite.value, len(checker.vectors))

    def preserves_top(op):
        return op.apply(alg.top) == alg.top

    def preserves_meets(op, x, y):
        return op.apply(alg.meet(x, y)) == alg.meet(op.apply(x), op.apply(y))

    def conjugate_bound(first, second):
        return lambda x: alg.leq(alg.neg(first.apply(alg.neg(second.apply(x)))), x)

    def galois_law(axiom):
        checker.check(axiom, checker.vectors, conjugate_bound(ts.G, ts.H), 'G')
        checker.check(axiom, checker.vectors, conjugate_bound(ts.H, ts.G), 'H')

    if suite is AxiomSuite.BOOLEAN_B:
        checker.check_each('B1', both, [()], preserves_top)
        checker.check_each('B2', both, checker.pairs, preserves_meets)
        galois_law('B3')
    elif suite is AxiomSuite.MV_T:
        checker.check_each('T1', both, [()], preserves_top)
        checker.check_each('T2', both, checker.pairs, lambda op, x, y: alg.leq(
            alg.mul(op.apply(x), op.apply(y)), op.apply(alg.mul(x, y))))
        checker.check_each('T3', both, checker.pairs, lambda op, x, y: alg.leq(
            alg.oplus(op.apply(x), op.apply(y)), op.apply(alg.oplus(x, y))))
        checker.check_each('T4', both, checker.vectors, lambda op, x: alg.mul(
            op.apply(x), op.apply(x)) == op.apply(alg.mul(x, x)))
        checker.check_each('T5', both, checker.vectors, lambda op, x: alg.oplus(
            op.apply(x), op.apply(x)) == op.apply(alg.oplus(x, x)))
        galois_law('T6')
    else:
        checker.check_each('PT1', both, checker.pairs, preserves_meets)
        checker.check_each('PT2', both, checker.scalars, lambda op, r, x: alg.shift(
            r, op.apply(x)) == op.apply(alg.shift(r, x)))
        galois_law('PT3')
    return report


@dataclass
class CorrespondenceReport:
    """
    Frame property against operator property, one (frame_side, operator_side) pair per entry.
    """
    entries: Dict[str, Tuple[Optional[bool], bool]] = field(default_factory=dict)
    witnesses: Dict[str, Tuple[str, ...]] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return all(frame == operator for frame, operator in self.entries.values())

    def to_json(self) -> dict:
        return {
            'agree': self.agree,
            'entries': {name: {'frame': frame_side, 'operator': operator_side}
                        for name, (frame_side, operator_side) in self.entries.items()},
            'witnesses': {name: list(w) for name, w in self.witnesses.items()},
        }


def frame_correspondence(frame: TimeFrame, budget: Optional[int] = None) -> CorrespondenceReport:
    """
    Compares reflexive with G <= id (and H <= id), symmetric with G = H and transitive with
    G <= GG (and H <= HH). Both sides are computed independently.
    """
    ts = tense_from_frame(frame, budget)
    properties = relation_properties(frame.rel)
    alg = ts.G.in_algebra
    vectors = [(x,) for x in ts.G.inputs()]
    report = CorrespondenceReport()

    def operator_side(name, predicate):
        witness = first_violation(name, vectors, predicate)
        if witness is not None:
            report.witnesses[name] = (alg.format(witness[0]),)
        return witness is None

    g_op, h_op = ts.G.apply, ts.H.apply
    report.entries['reflexive'] = (
        properties.reflexive, operator_side('reflexive', lambda x: alg.leq(g_op(x), x)))
    report.entries['reflexive_past'] = (
        properties.reflexive, operator_side('reflexive_past', lambda x: alg.leq(h_op(x), x)))
    report.entries['symmetric'] = (
        properties.symmetric, operator_side('symmetric', lambda x: g_op(x) == h_op(x)))
    report.entries['transitive'] = (
        properties.transitive,
        operator_side('transitive', lambda x: alg.leq(g_op(x), g_op(g_op(x)))))
    report.entries['transitive_past'] = (
        properties.transitive,
        operator_side('transitive_past', lambda x: alg.leq(h_op(x), h_op(h_op(x)))))
    return report


def monadic_from_equivalence(frame: TimeFrame, budget: Optional[int] = None
                             ) -> Tuple[OperatorTable, Optional[OperatorTable]]:
    """
    exists = rho_R for a fuzzy equivalence R and forall = not exists not (MV-algebras only,
    None otherwise).

    :raises PreconditionError: If R is not a fuzzy equivalence; the message names the law.
    """
    properties = relation_properties(frame.rel)
    if not properties.fuzzy_equivalence:
        violated = [law for law in ('reflexive', 'symmetric', 'transitive')
                    if not getattr(properties, law)]
        raise PreconditionError(
            f'Relation is not a fuzzy equivalence: {violated[0]} fails at '
            f'{", ".join(properties.witnesses[violated[0]])}')
    exists = induced_table(InducedKind.RHO, frame.rel, budget)
    forall = exists.negated() if _is_mv(frame.lattice) else None
    return exists, forall


_MONADIC_NEW_ADVISORY = ('exists_forall_bound', 'forall_neg_forall')
_MONADIC_ORIGINAL_ADVISORY = ('E6-as-printed', 'forall_submultiplicative')


def check_monadic(exists: OperatorTable, suite: AxiomSuite,
                  forall: Optional[OperatorTable] = None) -> AxiomReport:
    """
    monadic_new: exists is a closure operator with exists not exists = not exists and
    r * exists(x) = exists(r * x). monadic_original: (E1)-(E6) with (E6) in the product form
    exists(x*x) = exists(x)*exists(x), plus exists(r) = r for constant vectors.

    :raises UnsupportedStructureError: If the lattice is not an MV-algebra.
    :raises ShapeError: If exists is not an endo operator.
    """
    lattice = exists.lattice
    require_mv(lattice, 'check_monadic')
    if not exists.is_endo:
        raise ShapeError('Monadic operators must be endo operators')
    if suite not in (AxiomSuite.MONADIC_NEW, AxiomSuite.MONADIC_ORIGINAL):
        raise PreconditionError(f'Suite {suite.value} applies to tense structures')
    forall = forall or exists.negated()
    ex, fa = exists.apply, forall.apply

    if suite is AxiomSuite.MONADIC_NEW:
        report = AxiomReport(suite, advisory=_MONADIC_NEW_ADVISORY)
        checker = _AxiomChecker(report, exists)
        alg = checker.alg
        closure = closure_interior_check(exists)
        for law in ('monotone', 'extensive', 'idempotent'):
            report.results[law] = getattr(closure, law)
            if law in closure.witnesses:
                report.witnesses[law] = closure.witnesses[law]
        checker.check('exists_neg_exists', checker.vectors,
                      lambda x: ex(alg.neg(ex(x))) == alg.neg(ex(x)))
        checker.check('constant_product', checker.scalars,
                      lambda r, x: alg.scale(r, ex(x)) == ex(alg.scale(r, x)))
        checker.check('exists_forall_bound', checker.vectors,
                      lambda x: alg.leq(ex(fa(x)), x) and alg.leq(x, fa(ex(x))))
        checker.check('forall_neg_forall', checker.vectors,
                      lambda x: fa(alg.neg(fa(x))) == alg.neg(fa(x)))
        return report

    report = AxiomReport(suite, advisory=_MONADIC_ORIGINAL_ADVISORY)
    checker = _AxiomChecker(report, exists)
    alg = checker.alg
    checker.check('E1', checker.vectors, lambda x: alg.leq(x, ex(x)))
    checker.check('E2', checker.pairs,
                  lambda x, y: ex(alg.join(x, y)) == alg.join(ex(x), ex(y)))
    checker.check('E3', checker.vectors, lambda x: ex(alg.neg(ex(x))) == alg.neg(ex(x)))
    checker.check('E4', checker.pairs,
                  lambda x, y: ex(alg.oplus(ex(x), ex(y))) == alg.oplus(ex(x), ex(y)))
    checker.check('E5', checker.vectors,
                  lambda x: ex(alg.oplus(x, x)) == alg.oplus(ex(x), ex(x)))
    checker.check('E6', checker.vectors,
                  lambda x: ex(alg.mul(x, x)) == alg.mul(ex(x), ex(x)))
    checker.check('E-const', [(r,) for r in lattice.elements()],
                  lambda r: ex(alg.diagonal(r)) == alg.diagonal(r))
    checker.check('E6-as-printed', checker.vectors,
                  lambda x: ex(alg.mul(x, x)) == alg.oplus(ex(x), ex(x)))
    checker.check('forall_submultiplicative', checker.pairs,
                  lambda x, y: alg.leq(alg.mul(fa(x), fa(y)), fa(alg.mul(x, y))))
    return report


@dataclass
class BridgeReport:
    """
    For a closure operator exists: (A, exists) is monadic in the new sense iff (A, forall,
    forall) with forall = not exists not is a tense Pavelka algebra.
    """
    is_closure: bool
    monadic_new_passed: bool
    pavelka_pt_passed: bool

    @property
    def agree(self) -> bool:
        return self.monadic_new_passed == self.pavelka_pt_passed

    def to_json(self) -> dict:
        return {
            'is_closure': self.is_closure,
            'monadic_new_passed': self.monadic_new_passed,
            'pavelka_pt_passed': self.pavelka_pt_passed,
            'agree': self.agree,
        }


def monadic_tense_bridge(exists: OperatorTable) -> BridgeReport:
    """
    :raises UnsupportedStructureError: If the lattice is not an MV-algebra.
    """
    require_mv(exists.lattice, 'monadic_tense_bridge')
    forall = exists.negated()
    monadic = check_monadic(exists, AxiomSuite.MONADIC_NEW, forall)
    tense = check_axioms(TenseStructure(exists.lattice, forall, forall), AxiomSuite.PAVELKA_PT)
    return BridgeReport(closure_interior_check(exists).is_closure, monadic.passed, tense.passed)


@dataclass
class StrongAdjointReport:
    """
    The constant-exchange law on each side of a Galois pair:
    (f) r -> f(x) = f(r -> x) and (g) r * g(x) = g(r * x), or for reversed pairs
    (d) r -> d(x) = d(r * x) and (h) r -> h(x) = h(r * x).
    """
    reversed: bool
    first_law: bool
    second_law: bool
    witnesses: Dict[str, Tuple[str, ...]] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.first_law and self.second_law

    @property
    def equivalent(self) -> bool:
        return self.first_law == self.second_law

    def to_json(self) -> dict:
        return {
            'reversed': self.reversed,
            'first_law': self.first_law,
            'second_law': self.second_law,
            'holds': self.holds,
            'equivalent': self.equivalent,
            'witnesses': {law: list(w) for law, w in self.witnesses.items()},
        }


def _constant_law(op: OperatorTable, name: str, law: Callable[[int, Values], bool],
                  witnesses: Dict[str, Tuple[str, ...]]) -> bool:
    cases = [(r, x) for r in op.lattice.elements() for x in op.inputs()]
    witness = first_violation(name, cases, law)
    if witness is not None:
        witnesses[name] = (op.lattice.label_of(witness[0]), op.in_algebra.format(witness[1]))
    return witness is None


def strong_adjoint_check(f: OperatorTable, g: OperatorTable,
                         reversed: bool = False) -> StrongAdjointReport:
    """
    :raises PreconditionError: If (f, g) is not a (reversed) Galois connection.
    """
    if not verify_galois(f, g, reversed).holds:
        raise PreconditionError('Operators do not form a Galois connection')
    alg_f, alg_g = f.out_algebra, g.out_algebra
    in_f, in_g = f.in_algebra, g.in_algebra
    witnesses = {}
    if reversed:
        first = _constant_law(f, 'd', lambda r, x: alg_f.shift(r, f.apply(x)) == f.apply(
            in_f.scale(r, x)), witnesses)
        second = _constant_law(g, 'h', lambda r, x: alg_g.shift(r, g.apply(x)) == g.apply(
            in_g.scale(r, x)), witnesses)
    else:
        first = _constant_law(f, 'f', lambda r, x: alg_f.shift(r, f.apply(x)) == f.apply(
            in_f.shift(r, x)), witnesses)
        second = _constant_law(g, 'g', lambda r, x: alg_g.scale(r, g.apply(x)) == g.apply(
            in_g.scale(r, x)), witnesses)
    return StrongAdjointReport(reversed, first, second, witnesses)


@dataclass
class NegationSwapReport:
    """
    f strongly left adjoint to g against (not g not) strongly left adjoint to (not f not).
    """
    original: bool
    swapped: bool

    @property
    def agree(self) -> bool:
        return self.original == self.swapped

    def to_json(self) -> dict:
        return {'original': self.original, 'swapped': self.swapped, 'agree': self.agree}


def _is_strong_pair(f: OperatorTable, g: OperatorTable) -> bool:
    if not verify_galois(f, g).holds:
        return False
    return strong_adjoint_check(f, g).holds


def negation_swap_check(f: OperatorTable, g: OperatorTable) -> NegationSwapReport:
    """
    :raises UnsupportedStructureError: If the lattice is not an MV-algebra.
    :raises ShapeError: If the operators do not form a pair A^I <-> A^J.
    """
    require_mv(f.lattice, 'negation_swap_check')
    original = _is_strong_pair(f, g)
    swapped = _is_strong_pair(g.negated(), f.negated())
    return NegationSwapReport(original, swapped)
