"""
Tests of tense operators over frames, the axiom suites and monadic operators.
"""
import pathlib as pl
import unittest
from unittest import TestCase

from galois_kit.errors import PreconditionError, ShapeError, UnsupportedStructureError
from galois_kit.file_formats import load_relation
from galois_kit.lattice import make_goedel_chain, make_lukasiewicz_chain
from galois_kit.operator import AdjointDirection, InducedKind, OperatorTable, compute_adjoint, \
    induced_table
from galois_kit.relation import IndexSet, all_relations, relation_from_values, \
    relation_properties
from galois_kit.temporal import AxiomSuite, TimeFrame, check_axioms, check_monadic, \
    frame_correspondence, monadic_from_equivalence, monadic_tense_bridge, negation_swap_check, \
    strong_adjoint_check, tense_from_frame

TEST_FILES = pl.Path(__file__).parent / 'test_files'

LUK3 = make_lukasiewicz_chain(3)
BOOLEAN = make_lukasiewicz_chain(2)
T1 = IndexSet(['t'])
T2 = IndexSet(['t1', 't2'])


def frame(lattice, values, times=T2):
    return TimeFrame.from_relation(relation_from_values(lattice, times, times, values))


def load_frame(name):
    return TimeFrame.from_relation(load_relation(TEST_FILES / name))


def all_frames(lattice, times):
    return [TimeFrame.from_relation(relation) for relation in all_relations(lattice, times, times)]


def equivalences(lattice):
    """
    The fuzzy equivalences on two time points: off-diagonal value a, diagonal 1.
    """
    return [frame(lattice, [[lattice.top, a], [a, lattice.top]]) for a in lattice.elements()]


class TestTenseFromFrame(TestCase):
    """
    Tests the construction of G, H, F and P.
    """

    def test_identity_frame(self):
        """
        The identity frame induces the identity for G and H.
        """
        ts = tense_from_frame(frame(LUK3, [[2, 0], [0, 2]]))
        identity = OperatorTable.identity(LUK3, T2)
        self.assertEqual(identity, ts.G)
        self.assertEqual(identity, ts.H)
        self.assertEqual(identity, ts.F)

    def test_zero_frame(self):
        """
        Without accessible points G and H are constantly 1 and F, P constantly 0.
        """
        ts = tense_from_frame(frame(LUK3, [[0, 0], [0, 0]]))
        self.assertEqual(OperatorTable.constant(LUK3, T2, T2, LUK3.top), ts.H)
        self.assertEqual(OperatorTable.constant(LUK3, T2, T2, LUK3.bottom), ts.P)

    def test_past_and_future(self):
        """
        G and H agree on symmetric frames and differ otherwise.
        """
        symmetric = tense_from_frame(load_frame('frame_half.json'))
        self.assertEqual(symmetric.G, symmetric.H)
        preorder = tense_from_frame(load_frame('frame_crisp.json'))
        self.assertNotEqual(preorder.G, preorder.H)

    def test_goedel_has_no_duals(self):
        """
        F and P need a double negation.
        """
        ts = tense_from_frame(frame(make_goedel_chain(3), [[2, 1], [1, 2]]))
        self.assertIsNone(ts.F)
        self.assertIsNone(ts.P)

    def test_frame_must_be_square(self):
        """
        Frames relate time points to time points.
        """
        with self.assertRaises(ShapeError):
            TimeFrame.from_relation(relation_from_values(LUK3, T2, T1, [[0], [1]]))


class TestAxiomSuites(TestCase):
    """
    Tests the Boolean, MV and Pavelka tense axioms.
    """

    def test_boolean_frames(self):
        """
        Every crisp frame gives a tense Boolean algebra.
        """
        for tense_frame in all_frames(BOOLEAN, T2):
            report = check_axioms(tense_from_frame(tense_frame), AxiomSuite.BOOLEAN_B)
            self.assertTrue(report.passed)
            self.assertEqual([], report.failed())

    def test_pavelka_frames(self):
        """
        Every frame on the three-element chain gives a tense Pavelka algebra.
        """
        for tense_frame in all_frames(LUK3, T2):
            self.assertTrue(check_axioms(tense_from_frame(tense_frame),
                                         AxiomSuite.PAVELKA_PT).passed)

    def test_mv_suite_needs_crisp_frames(self):
        """
        The MV tense axioms hold iff the frame relation is crisp.
        """
        for times in (T1, T2):
            for tense_frame in all_frames(LUK3, times):
                report = check_axioms(tense_from_frame(tense_frame), AxiomSuite.MV_T)
                self.assertEqual(relation_properties(tense_frame.rel).boolean_valued,
                                 report.passed)
                self.assertTrue(report.results['T1'])
                self.assertTrue(report.results['T6'])

    def test_mv_witnesses(self):
        """
        R = 1/2 on a single point fails T2 at x = y = 1/2 and T3 at x = y = 0.
        """
        report = check_axioms(tense_from_frame(load_frame('frame_point_half.json')),
                              AxiomSuite.MV_T)
        self.assertFalse(report.passed)
        self.assertEqual(('G', '(1/2)', '(1/2)'), report.witnesses['T2'])
        self.assertEqual(('G', '(0)', '(0)'), report.witnesses['T3'])
        self.assertIn('T2', report.failed())

    def test_unsupported_suites(self):
        """
        boolean_B needs a Boolean algebra; monadic suites do not apply to tense structures.
        """
        ts = tense_from_frame(load_frame('frame_half.json'))
        with self.assertRaises(UnsupportedStructureError):
            check_axioms(ts, AxiomSuite.BOOLEAN_B)
        with self.assertRaises(PreconditionError):
            check_axioms(ts, AxiomSuite.MONADIC_NEW)
        goedel = tense_from_frame(frame(make_goedel_chain(3), [[2, 1], [1, 2]]))
        with self.assertRaises(UnsupportedStructureError):
            check_axioms(goedel, AxiomSuite.PAVELKA_PT)


class TestFrameCorrespondence(TestCase):
    """
    Tests that frame properties match operator properties.
    """

    def test_all_frames(self):
        """
        Reflexivity, symmetry and transitivity agree with their operator counterparts.
        """
        for tense_frame in all_frames(LUK3, T2):
            report = frame_correspondence(tense_frame)
            self.assertTrue(report.agree, report.to_json())

    def test_entries(self):
        """
        A crisp preorder is reflexive and transitive but not symmetric.
        """
        report = frame_correspondence(load_frame('frame_crisp.json'))
        self.assertEqual((True, True), report.entries['reflexive'])
        self.assertEqual((False, False), report.entries['symmetric'])
        self.assertEqual((True, True), report.entries['transitive'])
        self.assertIn('symmetric', report.witnesses)


class TestMonadic(TestCase):
    """
    Tests monadic operators induced by fuzzy equivalences.
    """

    def test_requires_equivalence(self):
        """
        Non-symmetric relations are refused, naming the law.
        """
        with self.assertRaisesRegex(PreconditionError, 'symmetric'):
            monadic_from_equivalence(load_frame('frame_crisp.json'))
        with self.assertRaisesRegex(PreconditionError, 'reflexive'):
            monadic_from_equivalence(load_frame('frame_point_half.json'))

    def test_operators(self):
        """
        exists is rho of the relation and forall its conjugate.
        """
        equivalence = load_frame('frame_half.json')
        exists, forall = monadic_from_equivalence(equivalence)
        self.assertEqual(induced_table(InducedKind.RHO, equivalence.rel), exists)
        self.assertEqual(exists.negated(), forall)
        _, goedel_forall = monadic_from_equivalence(
            frame(make_goedel_chain(3), [[2, 1], [1, 2]]))
        self.assertIsNone(goedel_forall)

    def test_graded_equivalence(self):
        """
        Off-diagonal 1/2 fails the original axioms at E5 with x = (0,1/2).
        """
        exists, forall = monadic_from_equivalence(load_frame('frame_half.json'))
        report = check_monadic(exists, AxiomSuite.MONADIC_ORIGINAL, forall)
        self.assertFalse(report.passed)
        self.assertFalse(report.results['E5'])
        self.assertEqual(('(0,1/2)',), report.witnesses['E5'])
        self.assertFalse(report.results['forall_submultiplicative'])
        self.assertTrue(report.results['E-const'])

    def test_original_axioms_need_crisp_relations(self):
        """
        The original axioms hold, and forall is submultiplicative, iff the equivalence is crisp.
        """
        for equivalence in equivalences(LUK3) + equivalences(BOOLEAN):
            crisp = relation_properties(equivalence.rel).boolean_valued
            exists, forall = monadic_from_equivalence(equivalence)
            report = check_monadic(exists, AxiomSuite.MONADIC_ORIGINAL, forall)
            self.assertEqual(crisp, report.passed)
            self.assertEqual(crisp, report.results['forall_submultiplicative'])
            self.assertTrue(report.results['E-const'])

    def test_new_axioms_on_crisp_equivalences(self):
        """
        Crisp equivalences give monadic algebras in the closure sense.
        """
        for equivalence in equivalences(BOOLEAN):
            exists, _ = monadic_from_equivalence(equivalence)
            report = check_monadic(exists, AxiomSuite.MONADIC_NEW)
            self.assertTrue(report.passed)
            self.assertTrue(report.results['extensive'])

    def test_tense_suite_is_refused(self):
        """
        Tense suites do not apply to monadic operators.
        """
        exists, _ = monadic_from_equivalence(load_frame('frame_half.json'))
        with self.assertRaises(PreconditionError):
            check_monadic(exists, AxiomSuite.MV_T)


class TestMonadicTenseBridge(TestCase):
    """
    Tests that monadic operators and tense Pavelka algebras with G = H = forall agree.
    """

    def test_equivalences(self):
        """
        Both sides agree for every equivalence.
        """
        for equivalence in equivalences(LUK3):
            exists, _ = monadic_from_equivalence(equivalence)
            self.assertTrue(monadic_tense_bridge(exists).agree)

    def test_identity(self):
        """
        The identity satisfies both sides.
        """
        report = monadic_tense_bridge(OperatorTable.identity(LUK3, T2))
        self.assertTrue(report.is_closure)
        self.assertTrue(report.monadic_new_passed)
        self.assertTrue(report.pavelka_pt_passed)

    def test_constant_top(self):
        """
        The constant top is a closure failing both sides.
        """
        report = monadic_tense_bridge(OperatorTable.constant(BOOLEAN, T1, T1, BOOLEAN.top))
        self.assertTrue(report.is_closure)
        self.assertFalse(report.monadic_new_passed)
        self.assertFalse(report.pavelka_pt_passed)
        self.assertTrue(report.agree)


class TestStrongAdjoints(TestCase):
    """
    Tests the constant-exchange laws of Galois pairs and their negation swap.
    """

    def test_induced_pairs(self):
        """
        (phi, rho) and (delta, epsilon) are strong pairs.
        """
        for relation in all_relations(LUK3, T2, T2):
            phi = induced_table(InducedKind.PHI, relation)
            rho = induced_table(InducedKind.RHO, relation)
            self.assertTrue(strong_adjoint_check(phi, rho).holds)
            self.assertTrue(negation_swap_check(phi, rho).agree)
            delta = induced_table(InducedKind.DELTA, relation)
            epsilon = induced_table(InducedKind.EPSILON, relation)
            self.assertTrue(strong_adjoint_check(delta, epsilon, reversed=True).holds)

    def test_weak_pair(self):
        """
        x v 1/2 and its partner form a Galois pair violating both laws.
        """
        half = LUK3.index_of('1/2')
        f = OperatorTable.from_function(LUK3, T1, T1, lambda x: (LUK3.join(x[0], half),))
        g = compute_adjoint(f, AdjointDirection.RIGHT_OF_MONOTONE)
        report = strong_adjoint_check(f, g)
        self.assertFalse(report.first_law)
        self.assertFalse(report.second_law)
        self.assertTrue(report.equivalent)
        swap = negation_swap_check(f, g)
        self.assertFalse(swap.original)
        self.assertFalse(swap.swapped)

    def test_requires_galois_pair(self):
        """
        Pairs that are no Galois connection are refused.
        """
        identity = OperatorTable.identity(LUK3, T1)
        constant = OperatorTable.constant(LUK3, T1, T1, LUK3.top)
        with self.assertRaises(PreconditionError):
            strong_adjoint_check(identity, constant)


if __name__ == '__main__':
    unittest.main()
