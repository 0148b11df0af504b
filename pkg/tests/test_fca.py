"""
Tests of fuzzy contexts, derivation operators and concept lattices.
"""
import itertools
import json
import pathlib as pl
import unittest
from unittest import TestCase

from galois_kit.errors import BudgetExceededError, FormatError, NotDecomposableError, ShapeError
from galois_kit.fca import DerivationSide, ExportFormat, FuzzyContext, context_from_closure, \
    derivation_pair, derive, enumerate_concepts, export_lattice
from galois_kit.file_formats import load_context
from galois_kit.lattice import make_lukasiewicz_chain
from galois_kit.operator import InducedKind, OperatorTable, apply_induced, \
    closure_interior_check, verify_galois
from galois_kit.relation import IndexSet, all_relations, relation_from_values
from galois_kit.vector import FuzzyVector

TEST_FILES = pl.Path(__file__).parent / 'test_files'

LUK3 = make_lukasiewicz_chain(3)
BOOLEAN = make_lukasiewicz_chain(2)
G2 = IndexSet(['g1', 'g2'])
M2 = IndexSet(['m1', 'm2'])


def context(lattice, values, objects=G2, attributes=M2):
    return FuzzyContext.from_relation(relation_from_values(lattice, objects, attributes, values))


class TestDerivation(TestCase):
    """
    Tests the derivation operators of a context.
    """

    def test_identity_context(self):
        """
        In the crisp identity context {g1}' = {m1} and {m2}' = {g2}.
        """
        ctx = context(BOOLEAN, [[1, 0], [0, 1]])
        x = FuzzyVector.from_labels(BOOLEAN, G2, ['1', '0'])
        self.assertEqual(['1', '0'], derive(ctx, DerivationSide.OBJECTS_TO_ATTRS, x).labels())
        y = FuzzyVector.from_labels(BOOLEAN, M2, ['0', '1'])
        self.assertEqual(['0', '1'], derive(ctx, DerivationSide.ATTRS_TO_OBJECTS, y).labels())

    def test_graded(self):
        """
        d(1) = 1 -> 1/2 = 1/2 for a single incidence 1/2.
        """
        ctx = context(LUK3, [[1]], IndexSet(['g']), IndexSet(['m']))
        x = FuzzyVector.from_labels(LUK3, ctx.objects, ['1'])
        self.assertEqual(['1/2'], derive(ctx, DerivationSide.OBJECTS_TO_ATTRS, x).labels())

    def test_wrong_side(self):
        """
        Object vectors cannot be derived as attribute vectors.
        """
        ctx = context(BOOLEAN, [[1, 0], [0, 1]])
        x = FuzzyVector.from_labels(BOOLEAN, G2, ['1', '0'])
        with self.assertRaises(ShapeError):
            derive(ctx, DerivationSide.ATTRS_TO_OBJECTS, x)

    def test_incidence_shape(self):
        """
        The incidence must relate the objects to the attributes.
        """
        relation = relation_from_values(BOOLEAN, G2, M2, [[1, 0], [0, 1]])
        with self.assertRaises(ShapeError):
            FuzzyContext(M2, G2, relation)

    def test_reversed_galois_connection(self):
        """
        (d, h) is a reversed Galois connection, both composites are closures with the scalar
        law and both have as many fixpoints as there are concepts, for every context on two
        objects and two attributes.
        """
        for relation in all_relations(LUK3, G2, M2):
            ctx = FuzzyContext.from_relation(relation)
            d, h = derivation_pair(ctx)
            self.assertTrue(verify_galois(d, h, reversed=True).holds)
            self.assertTrue(closure_interior_check(d.then(h)).has_scalar_law_closure)
            self.assertTrue(closure_interior_check(h.then(d)).has_scalar_law_closure)
            count = len(enumerate_concepts(ctx))
            self.assertEqual(count, len(d.then(h).fixpoints()))
            self.assertEqual(count, len(h.then(d).fixpoints()))

    def test_matches_induced_operators(self):
        """
        d is delta and h is epsilon of the incidence on every input.
        """
        for relation in all_relations(LUK3, G2, M2):
            ctx = FuzzyContext.from_relation(relation)
            for values in itertools.product(LUK3.elements(), repeat=2):
                x = FuzzyVector(G2, values, LUK3)
                self.assertEqual(apply_induced(InducedKind.DELTA, relation, x),
                                 derive(ctx, DerivationSide.OBJECTS_TO_ATTRS, x))
                y = FuzzyVector(M2, values, LUK3)
                self.assertEqual(apply_induced(InducedKind.EPSILON, relation, y),
                                 derive(ctx, DerivationSide.ATTRS_TO_OBJECTS, y))


class TestConcepts(TestCase):
    """
    Tests concept enumeration and the concept order.
    """

    def test_identity_context(self):
        """
        The crisp identity context has the four-element Boolean concept lattice.
        """
        concepts = enumerate_concepts(context(BOOLEAN, [[1, 0], [0, 1]]))
        self.assertEqual([(0, 0), (0, 1), (1, 0), (1, 1)],
                         [concept.extent.values for concept in concepts.concepts])
        self.assertEqual((1, 0), concepts.concepts[2].intent.values)
        self.assertEqual((1, 1), concepts.concepts[0].intent.values)
        self.assertEqual([(0, 1), (0, 2), (1, 3), (2, 3)], concepts.cover_edges())
        self.assertTrue(concepts.leq(0, 3))
        self.assertFalse(concepts.leq(1, 2))

    def test_all_ones(self):
        """
        A full incidence has a single concept.
        """
        ctx = load_context(TEST_FILES / 'all_ones.csv', BOOLEAN)
        concepts = enumerate_concepts(ctx)
        self.assertEqual(1, len(concepts))
        self.assertEqual([], concepts.cover_edges())

    def test_graded_incidence(self):
        """
        Incidence 1/2 on the three-element chain gives the extents 1/2 and 1.
        """
        concepts = enumerate_concepts(load_context(TEST_FILES / 'half.csv', LUK3))
        self.assertEqual(['(1/2)', '(1)'], [str(c.extent) for c in concepts.concepts])
        self.assertEqual(['(1)', '(1/2)'], [str(c.intent) for c in concepts.concepts])
        self.assertEqual([(0, 1)], concepts.cover_edges())

    def test_classical_concepts(self):
        """
        On crisp contexts the extents are the classical closed object sets.
        """
        for relation in all_relations(BOOLEAN, G2, M2):
            rows = relation.values
            extents = set()
            for subset in itertools.product((0, 1), repeat=2):
                intent = [all(rows[g][m] for g in range(2) if subset[g]) for m in range(2)]
                extents.add(tuple(int(all(rows[g][m] for m in range(2) if intent[m]))
                                  for g in range(2)))
            found = enumerate_concepts(FuzzyContext.from_relation(relation))
            self.assertEqual(extents, {c.extent.values for c in found.concepts})

    def test_budget(self):
        """
        The enumeration respects the budget.
        """
        with self.assertRaises(BudgetExceededError):
            enumerate_concepts(context(LUK3, [[1, 0], [0, 1]]), budget=8)


class TestExport(TestCase):
    """
    Tests the DOT and JSON renderings of concept lattices.
    """

    def test_dot_single_concept(self):
        """
        A single concept is a single node without edges.
        """
        concepts = enumerate_concepts(load_context(TEST_FILES / 'all_ones.csv', BOOLEAN))
        self.assertEqual('digraph concepts {\n'
                         '\tnode [shape=box];\n'
                         '\tc0 [label="(1,1)|(1,1)"];\n'
                         '}\n', export_lattice(concepts, ExportFormat.DOT))

    def test_dot_edges(self):
        """
        Cover edges point from the smaller to the larger concept.
        """
        dot = export_lattice(enumerate_concepts(context(BOOLEAN, [[1, 0], [0, 1]])),
                             ExportFormat.DOT)
        self.assertIn('\tc0 [label="(0,0)|(1,1)"];\n', dot)
        self.assertIn('\tc0 -> c1;\n', dot)
        self.assertIn('\tc2 -> c3;\n', dot)
        self.assertNotIn('c0 -> c3', dot)

    def test_json(self):
        """
        The JSON form lists concepts by name and the cover edges.
        """
        concepts = enumerate_concepts(load_context(TEST_FILES / 'half.csv', LUK3))
        payload = json.loads(export_lattice(concepts, ExportFormat.JSON))
        self.assertEqual({'extent': {'g1': '1/2'}, 'intent': {'m1': '1'}},
                         payload['concepts'][0])
        self.assertEqual([[0, 1]], payload['edges'])

    def test_deterministic(self):
        """
        Identical contexts render identically.
        """
        first = export_lattice(enumerate_concepts(context(LUK3, [[1, 2], [0, 1]])),
                               ExportFormat.DOT)
        second = export_lattice(enumerate_concepts(context(LUK3, [[1, 2], [0, 1]])),
                                ExportFormat.DOT)
        self.assertEqual(first, second)


class TestContextFromClosure(TestCase):
    """
    Tests the construction of contexts from closure operators.
    """

    def test_round_trip(self):
        """
        The closure of a context is reproduced by the context built from it.
        """
        for values in ([[1, 2], [0, 1]], [[2, 0], [0, 2]], [[1, 1], [1, 1]]):
            d, h = derivation_pair(context(LUK3, values))
            closure = d.then(h)
            rebuilt = context_from_closure(closure)
            self.assertEqual(G2, rebuilt.objects)
            d2, h2 = derivation_pair(rebuilt)
            self.assertEqual(closure, d2.then(h2))

    def test_not_decomposable(self):
        """
        A closure without the scalar law has no context.
        """
        op = OperatorTable(IndexSet(['g']), IndexSet(['g']), LUK3, ((0,), (2,), (2,)))
        with self.assertRaises(NotDecomposableError):
            context_from_closure(op)


class TestContextFiles(TestCase):
    """
    Tests reading contexts from CSV and JSON files.
    """

    def test_csv(self):
        """
        The header names the attributes and the first column the objects.
        """
        ctx = load_context(TEST_FILES / 'identity.csv', BOOLEAN)
        self.assertEqual(('g1', 'g2'), ctx.objects.names)
        self.assertEqual(('m1', 'm2'), ctx.attributes.names)
        self.assertEqual(((1, 0), (0, 1)), ctx.incidence.values)

    def test_csv_needs_lattice(self):
        """
        CSV files carry no lattice.
        """
        with self.assertRaises(FormatError):
            load_context(TEST_FILES / 'identity.csv')

    def test_csv_encoding(self):
        """
        CSV contexts must be UTF-8.
        """
        with self.assertRaisesRegex(FormatError, 'not UTF-8 encoded'):
            load_context(TEST_FILES / 'not_utf8.csv', BOOLEAN)

    def test_json(self):
        """
        JSON contexts use the relation format.
        """
        ctx = load_context(TEST_FILES / 'r.json')
        self.assertEqual(('a', 'b'), ctx.objects.names)
        self.assertEqual(LUK3, ctx.lattice)

    def test_missing_and_unsupported(self):
        """
        Missing files and unknown suffixes are reported.
        """
        with self.assertRaises(FileNotFoundError):
            load_context(TEST_FILES / 'missing.csv', BOOLEAN)
        with self.assertRaises(FormatError):
            load_context(TEST_FILES / 'context.txt', BOOLEAN)


if __name__ == '__main__':
    unittest.main()
