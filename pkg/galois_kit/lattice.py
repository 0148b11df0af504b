"""
Finite commutative bounded integral residuated lattices.

A lattice is stored as four operation tables over element indices. Index 0 is the bottom and the
last index is the top; all operations are table lookups, so equality of elements is index
equality and no floating point is involved.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import FormatError, LawViolationError, PreconditionError, \
    UnsupportedStructureError
from .sweep import first_violation

logger = logging.getLogger(__name__)

Table = Tuple[Tuple[int, ...], ...]
LabelLike = Union[str, int, Fraction]

TABLE_NAMES = ('join', 'meet', 'prod', 'impl')


class LatticeKind(Enum):
    """
    Construction hint of a lattice. Chains can be regenerated from their size alone.
    """

    LUKASIEWICZ = 'lukasiewicz'
    GOEDEL = 'goedel'
    CUSTOM = 'custom'


def parse_label(label: LabelLike) -> Fraction:
    """
    Converts a label given as string, integer or fraction to an exact rational.

    :param label: Label such as "1/2", "0.5", 1 or Fraction(1, 2).
    :raises FormatError: If the label is not an exact rational.
    """
    if isinstance(label, bool):
        raise FormatError(f'Invalid carrier label: {label!r}')
    if isinstance(label, (int, Fraction)):
        return Fraction(label)
    try:
        return Fraction(str(label).strip())
    except (ValueError, ZeroDivisionError) as error:
        raise FormatError(f'Invalid carrier label: {label!r}') from error


@dataclass(frozen=True)
class Element:
    """
    An element of a finite carrier, identified by its index.
    """
    idx: int


@dataclass(frozen=True)
class LatticeSpec:
    """
    A finite residuated lattice (A; join, meet, prod, impl, 0, 1).

    Instances exposed by the constructors of this module always pass
    `validate_residuated_lattice`.
    """
    labels: Tuple[Fraction, ...]
    join_table: Table
    meet_table: Table
    prod_table: Table
    impl_table: Table
    kind: LatticeKind = field(default=LatticeKind.CUSTOM, compare=False)

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.labels) - 1

    @cached_property
    def _index_by_label(self) -> Dict[Fraction, int]:
        return {label: idx for idx, label in enumerate(self.labels)}

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def mul(self, x: int, y: int) -> int:
        return self.prod_table[x][y]

    def impl(self, x: int, y: int) -> int:
        return self.impl_table[x][y]

    def neg(self, x: int) -> int:
        """
        Residual negation x -> 0.
        """
        return self.impl_table[x][0]

    def oplus(self, x: int, y: int) -> int:
        """
        Strong disjunction, not(not x * not y). Only meaningful on MV lattices.
        """
        return self.neg(self.mul(self.neg(x), self.neg(y)))

    def leq(self, x: int, y: int) -> bool:
        return self.meet_table[x][y] == x

    def elements(self) -> range:
        return range(len(self.labels))

    def label_of(self, idx: int) -> str:
        return str(self.labels[idx])

    def index_of(self, label: LabelLike) -> int:
        """
        :param label: Carrier label.
        :raises FormatError: If the label does not name a carrier element.
        """
        value = parse_label(label)
        try:
            return self._index_by_label[value]
        except KeyError as error:
            raise FormatError(
                f'Label "{label}" is not in the carrier '
                f'{{{", ".join(self.label_of(i) for i in self.elements())}}}') from error

    def element(self, label: LabelLike) -> Element:
        return Element(self.index_of(label))

    def format_values(self, values: Iterable[int]) -> str:
        """
        Renders an index tuple as "(l1,l2,...)".
        """
        return '(' + ','.join(self.label_of(v) for v in values) + ')'

    def join_all(self, values: Iterable[int]) -> int:
        result = self.bottom
        for value in values:
            result = self.join_table[result][value]
        return result

    def meet_all(self, values: Iterable[int]) -> int:
        result = self.top
        for value in values:
            result = self.meet_table[result][value]
        return result


@dataclass
class LatticeReport:
    """
    Results of the residuated-lattice laws and the BL/MV classification.
    """
    is_bounded_lattice: bool
    is_comm_monoid: bool
    has_adjointness: bool
    has_divisibility: bool
    has_prelinearity: bool
    has_double_negation: bool
    counterexamples: List[Tuple[str, Tuple[str, ...]]] = field(default_factory=list)

    @property
    def is_residuated(self) -> bool:
        return self.is_bounded_lattice and self.is_comm_monoid and self.has_adjointness

    @property
    def is_bl(self) -> bool:
        return self.is_residuated and self.has_divisibility and self.has_prelinearity

    @property
    def is_mv(self) -> bool:
        return self.is_bl and self.has_double_negation

    def to_json(self) -> dict:
        return {
            'is_bounded_lattice': self.is_bounded_lattice,
            'is_comm_monoid': self.is_comm_monoid,
            'has_adjointness': self.has_adjointness,
            'has_divisibility': self.has_divisibility,
            'has_prelinearity': self.has_prelinearity,
            'has_double_negation': self.has_double_negation,
            'is_residuated': self.is_residuated,
            'is_bl': self.is_bl,
            'is_mv': self.is_mv,
            'counterexamples': [{'law': law, 'witness': list(witness)}
                                for law, witness in self.counterexamples],
        }


def _chain_labels(k: int) -> Tuple[Fraction, ...]:
    if k < 2:
        raise PreconditionError(f'A chain needs at least 2 elements, got k={k}')
    return tuple(Fraction(i, k - 1) for i in range(k))


def _tabulate(k: int, operation) -> Table:
    return tuple(tuple(operation(x, y) for y in range(k)) for x in range(k))


def make_lukasiewicz_chain(k: int) -> LatticeSpec:
    """
    The Lukasiewicz chain {0, 1/(k-1), ..., 1} with x*y = max(x+y-1, 0) and
    x->y = min(1-x+y, 1).

    :param k: Number of elements, at least 2.
    :raises PreconditionError: If k < 2.
    """
    labels = _chain_labels(k)
    top = k - 1
    return LatticeSpec(
        labels=labels,
        join_table=_tabulate(k, max),
        meet_table=_tabulate(k, min),
        prod_table=_tabulate(k, lambda x, y: max(x + y - top, 0)),
        impl_table=_tabulate(k, lambda x, y: min(top - x + y, top)),
        kind=LatticeKind.LUKASIEWICZ,
    )


def make_goedel_chain(k: int) -> LatticeSpec:
    """
    The Goedel chain {0, 1/(k-1), ..., 1} with x*y = min(x, y) and x->y = 1 if x<=y else y.

    :param k: Number of elements, at least 2.
    :raises PreconditionError: If k < 2.
    """
    labels = _chain_labels(k)
    top = k - 1
    return LatticeSpec(
        labels=labels,
        join_table=_tabulate(k, max),
        meet_table=_tabulate(k, min),
        prod_table=_tabulate(k, min),
        impl_table=_tabulate(k, lambda x, y: top if x <= y else y),
        kind=LatticeKind.GOEDEL,
    )


def make_custom_lattice(labels: Sequence[LabelLike],
                        tables: Mapping[str, Sequence[Sequence[int]]]) -> LatticeSpec:
    """
    Builds a lattice from explicit operation tables.

    :param labels: Carrier labels, bottom first and top last.
    :param tables: Mapping with the keys "join", "meet", "prod" and "impl".
    :raises FormatError: If a table is missing, not square or not closed over the carrier.
    :raises LawViolationError: If a residuated-lattice law fails; carries the witness.
    """
    parsed = tuple(parse_label(label) for label in labels)
    size = len(parsed)
    if size < 2:
        raise FormatError('A lattice needs at least two labels')
    if len(set(parsed)) != size:
        raise FormatError('Carrier labels must be distinct')
    if parsed[0] != 0:
        raise FormatError(f'The first carrier label must be the bottom 0, got "{labels[0]}"')
    if parsed[-1] != 1:
        raise FormatError(f'The last carrier label must be the top 1, got "{labels[-1]}"')

    normalized = {}
    for name in TABLE_NAMES:
        if name not in tables:
            raise FormatError(f'Missing operation table "{name}"')
        rows = tables[name]
        if len(rows) != size or any(len(row) != size for row in rows):
            raise FormatError(f'Table "{name}" must be {size}x{size}')
        for x, row in enumerate(rows):
            for y, entry in enumerate(row):
                if isinstance(entry, bool) or not isinstance(entry, int) \
                        or not 0 <= entry < size:
                    raise FormatError(
                        f'Table "{name}" entry [{x}][{y}] = {entry!r} is not a carrier index')
        normalized[name] = tuple(tuple(row) for row in rows)

    spec = LatticeSpec(
        labels=parsed,
        join_table=normalized['join'],
        meet_table=normalized['meet'],
        prod_table=normalized['prod'],
        impl_table=normalized['impl'],
        kind=LatticeKind.CUSTOM,
    )
    report = validate_residuated_lattice(spec)
    if not report.is_residuated:
        law, witness = report.counterexamples[0]
        raise LawViolationError(law, witness, f'Tables do not form a residuated lattice: {law}')
    return spec


class _LawRecorder:
    """
    Collects the first counterexample of each law.
    """

    def __init__(self, spec: LatticeSpec):
        self.spec = spec
        self.counterexamples: List[Tuple[str, Tuple[str, ...]]] = []

    def check(self, law: str, arity: int, predicate) -> bool:
        cases = itertools.product(self.spec.elements(), repeat=arity)
        witness = first_violation(law, cases, predicate)
        if witness is None:
            return True
        self.counterexamples.append((law, tuple(self.spec.label_of(w) for w in witness)))
        return False


def validate_residuated_lattice(spec: LatticeSpec) -> LatticeReport:
    """
    Checks the bounded-lattice, commutative-monoid and adjointness laws over all element
    triples and evaluates the BL/MV classification laws. Failures are reported, never raised.

    :param spec: Lattice with total tables.
    :return: Report with one counterexample per failed law.
    """
    logger.debug('Validating lattice of size %d', spec.size)
    join, meet, mul, impl = spec.join, spec.meet, spec.mul, spec.impl
    bottom, top = spec.bottom, spec.top
    laws = _LawRecorder(spec)

    lattice_laws = [
        laws.check('join-commutative', 2, lambda x, y: join(x, y) == join(y, x)),
        laws.check('meet-commutative', 2, lambda x, y: meet(x, y) == meet(y, x)),
        laws.check('join-associative', 3,
                   lambda x, y, z: join(join(x, y), z) == join(x, join(y, z))),
        laws.check('meet-associative', 3,
                   lambda x, y, z: meet(meet(x, y), z) == meet(x, meet(y, z))),
        laws.check('absorption', 2,
                   lambda x, y: join(x, meet(x, y)) == x and meet(x, join(x, y)) == x),
        laws.check('bounds', 1, lambda x: join(x, bottom) == x and meet(x, top) == x),
    ]
    monoid_laws = [
        laws.check('product-commutative', 2, lambda x, y: mul(x, y) == mul(y, x)),
        laws.check('product-associative', 3,
                   lambda x, y, z: mul(mul(x, y), z) == mul(x, mul(y, z))),
        laws.check('product-unit', 1, lambda x: mul(x, top) == x),
    ]
    adjointness = laws.check(
        'adjointness', 3,
        lambda x, y, z: spec.leq(mul(x, y), z) == spec.leq(x, impl(y, z)))
    divisibility = laws.check('divisibility', 2, lambda x, y: mul(x, impl(x, y)) == meet(x, y))
    prelinearity = laws.check('prelinearity', 2,
                              lambda x, y: join(impl(x, y), impl(y, x)) == top)
    double_negation = laws.check('double-negation', 1, lambda x: spec.neg(spec.neg(x)) == x)

    return LatticeReport(
        is_bounded_lattice=all(lattice_laws),
        is_comm_monoid=all(monoid_laws),
        has_adjointness=adjointness,
        has_divisibility=divisibility,
        has_prelinearity=prelinearity,
        has_double_negation=double_negation,
        counterexamples=laws.counterexamples,
    )


def classify_lattice(spec: LatticeSpec) -> LatticeReport:
    """
    Classifies a residuated lattice as BL and/or MV algebra.

    :raises PreconditionError: If the tables do not form a residuated lattice.
    """
    report = validate_residuated_lattice(spec)
    if not report.is_residuated:
        law, witness = report.counterexamples[0]
        raise PreconditionError(f'Not a residuated lattice: {law} fails at {witness}')
    return report


def is_boolean_algebra(spec: LatticeSpec) -> bool:
    """
    True for MV lattices with an idempotent product, i.e. Boolean algebras.
    """
    return classify_lattice(spec).is_mv and all(spec.mul(x, x) == x for x in spec.elements())


def require_mv(spec: LatticeSpec, operation: str) -> None:
    """
    :raises UnsupportedStructureError: If the lattice is not an MV-algebra.
    """
    report = classify_lattice(spec)
    if not report.is_mv:
        raise UnsupportedStructureError(
            f'{operation} requires an MV-algebra; the lattice fails '
            f'{", ".join(law for law, _ in report.counterexamples)}')


@dataclass
class MvOperations:
    """
    The (oplus, neg, 0) operations of an MV lattice together with the checked translation laws.
    """
    lattice: LatticeSpec
    neg_table: Tuple[int, ...]
    oplus_table: Table
    monoid: bool
    double_negation: bool
    lukasiewicz_axiom: bool
    order_agrees: bool
    translation_agrees: bool

    def neg(self, x: int) -> int:
        return self.neg_table[x]

    def oplus(self, x: int, y: int) -> int:
        return self.oplus_table[x][y]

    @property
    def all_laws_hold(self) -> bool:
        return self.monoid and self.double_negation and self.lukasiewicz_axiom \
            and self.order_agrees and self.translation_agrees

    def to_json(self) -> dict:
        label = self.lattice.label_of
        return {
            'labels': [label(x) for x in self.lattice.elements()],
            'neg': [label(v) for v in self.neg_table],
            'oplus': [[label(v) for v in row] for row in self.oplus_table],
            'mv1_monoid': self.monoid,
            'mv2_double_negation': self.double_negation,
            'mv3_lukasiewicz_axiom': self.lukasiewicz_axiom,
            'order_agrees': self.order_agrees,
            'translation_agrees': self.translation_agrees,
        }


def mv_extend(spec: LatticeSpec) -> MvOperations:
    """
    Derives the MV operations neg x = x->0 and x (+) y = neg(neg x * neg y) and checks the
    (MV1)-(MV3) axioms, the order x<=y iff neg x (+) y = 1 and the translation back to the
    residuated operations.

    :raises UnsupportedStructureError: If the lattice is not an MV-algebra.
    """
    require_mv(spec, 'mv_extend')
    elements = spec.elements()
    neg_table = tuple(spec.neg(x) for x in elements)
    oplus_table = _tabulate(spec.size, spec.oplus)
    neg = neg_table.__getitem__

    def oplus(x, y):
        return oplus_table[x][y]

    pairs = list(itertools.product(elements, repeat=2))
    triples = itertools.product(elements, repeat=3)
    monoid = all(oplus(x, y) == oplus(y, x) for x, y in pairs) \
        and all(oplus(oplus(x, y), z) == oplus(x, oplus(y, z)) for x, y, z in triples) \
        and all(oplus(x, spec.bottom) == x for x in elements)
    double_negation = all(neg(neg(x)) == x for x in elements)
    lukasiewicz_axiom = all(
        oplus(neg(oplus(neg(x), y)), y) == oplus(neg(oplus(neg(y), x)), x) for x, y in pairs)
    order_agrees = all(spec.leq(x, y) == (oplus(neg(x), y) == spec.top) for x, y in pairs)

    def translated_join(x, y):
        return oplus(neg(oplus(neg(x), y)), y)

    translation_agrees = neg(spec.bottom) == spec.top and all(
        translated_join(x, y) == spec.join(x, y)
        and neg(translated_join(neg(x), neg(y))) == spec.meet(x, y)
        and neg(oplus(neg(x), neg(y))) == spec.mul(x, y)
        and oplus(neg(x), y) == spec.impl(x, y)
        for x, y in pairs)

    return MvOperations(
        lattice=spec,
        neg_table=neg_table,
        oplus_table=oplus_table,
        monoid=monoid,
        double_negation=double_negation,
        lukasiewicz_axiom=lukasiewicz_axiom,
        order_agrees=order_agrees,
        translation_agrees=translation_agrees,
    )


@dataclass
class DistributionReport:
    """
    Results of the distribution laws of product and residuum over finite joins and meets.
    """
    max_subset: int
    product_over_join: bool
    join_implication: bool
    implication_over_meet: bool
    witnesses: Dict[str, Tuple[str, ...]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.product_over_join and self.join_implication and self.implication_over_meet

    def to_json(self) -> dict:
        return {
            'max_subset': self.max_subset,
            'product_over_join': self.product_over_join,
            'join_implication': self.join_implication,
            'implication_over_meet': self.implication_over_meet,
            'passed': self.passed,
            'witnesses': {law: list(witness) for law, witness in self.witnesses.items()},
        }


def check_residuation_distribution(spec: LatticeSpec,
                                   max_subset: Optional[int] = None) -> DistributionReport:
    """
    For every x and every non-empty subset M with |M| <= max_subset checks
    x * join(M) = join(x * m), join(M) -> x = meet(m -> x) and x -> meet(M) = meet(x -> m).

    :param spec: Residuated lattice.
    :param max_subset: Largest subset size, defaults to the carrier size.
    :raises PreconditionError: If the lattice is not residuated or max_subset < 1.
    """
    classify_lattice(spec)
    if max_subset is None:
        max_subset = spec.size
    if max_subset < 1:
        raise PreconditionError('max_subset must be at least 1')
    max_subset = min(max_subset, spec.size)

    subsets = [subset for size in range(1, max_subset + 1)
               for subset in itertools.combinations(spec.elements(), size)]
    cases = [(x, subset) for x in spec.elements() for subset in subsets]

    def product_over_join(x, subset):
        return spec.mul(x, spec.join_all(subset)) == spec.join_all(spec.mul(x, m) for m in subset)

    def join_implication(x, subset):
        return spec.impl(spec.join_all(subset), x) == spec.meet_all(
            spec.impl(m, x) for m in subset)

    def implication_over_meet(x, subset):
        return spec.impl(x, spec.meet_all(subset)) == spec.meet_all(
            spec.impl(x, m) for m in subset)

    witnesses = {}
    flags = {}
    for name, law in (('product_over_join', product_over_join),
                      ('join_implication', join_implication),
                      ('implication_over_meet', implication_over_meet)):
        witness = first_violation(name, cases, law)
        flags[name] = witness is None
        if witness is not None:
            x, subset = witness
            witnesses[name] = (spec.label_of(x), '{' + ','.join(
                spec.label_of(m) for m in subset) + '}')

    return DistributionReport(max_subset=max_subset, witnesses=witnesses, **flags)
