"""
Tests of the enumeration budget and the canonical sweep order.
"""
import os
import unittest
from unittest import TestCase, mock

from galois_kit.errors import BudgetExceededError, PreconditionError
from galois_kit.sweep import BUDGET_ENV_VAR, DEFAULT_BUDGET, check_budget, enumerate_values, \
    first_violation, rank_of, resolve_budget


class TestBudget(TestCase):
    """
    Tests the resolution order of the enumeration budget.
    """

    def test_default(self):
        """
        Without configuration the default budget applies.
        """
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(DEFAULT_BUDGET, resolve_budget())

    def test_environment(self):
        """
        The environment variable overrides the default; an explicit value overrides both.
        """
        with mock.patch.dict(os.environ, {BUDGET_ENV_VAR: '50'}):
            self.assertEqual(50, resolve_budget())
            self.assertEqual(7, resolve_budget(7))

    def test_invalid_values(self):
        """
        Non-integer and non-positive budgets are rejected.
        """
        with mock.patch.dict(os.environ, {BUDGET_ENV_VAR: 'many'}):
            with self.assertRaises(PreconditionError):
                resolve_budget()
        with self.assertRaises(PreconditionError):
            resolve_budget(0)

    def test_exceeded(self):
        """
        3^9 vectors do not fit into a budget of 10,000 but 3^8 do.
        """
        self.assertEqual(6561, check_budget(3, 8, DEFAULT_BUDGET))
        with self.assertRaises(BudgetExceededError):
            check_budget(3, 9, DEFAULT_BUDGET)
        with self.assertRaises(BudgetExceededError):
            enumerate_values(2, 4, 15)


class TestSweepOrder(TestCase):
    """
    Tests the canonical enumeration order.
    """

    def test_lexicographic(self):
        """
        The first coordinate is the most significant one.
        """
        self.assertEqual([(0, 0), (0, 1), (1, 0), (1, 1)], list(enumerate_values(2, 2)))

    def test_rank(self):
        """
        rank_of is the position in the enumeration.
        """
        for position, values in enumerate(enumerate_values(3, 3)):
            self.assertEqual(position, rank_of(values, 3))

    def test_first_violation(self):
        """
        The first failing case is returned, None if the law holds.
        """
        cases = [(x,) for x in range(10)]
        self.assertEqual((4,), first_violation('small', cases, lambda x: x < 4))
        self.assertIsNone(first_violation('small', cases, lambda x: x < 10))


if __name__ == '__main__':
    unittest.main()
