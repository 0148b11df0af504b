"""
Exhaustive enumeration helpers and the enumeration budget.

All sweeps enumerate vectors in the canonical order: lexicographic by element index with the
first coordinate most significant. Witnesses are always the first violation in that order.
"""

from __future__ import annotations

import itertools
import logging
import os
from typing import Callable, Iterable, Iterator, Optional, Tuple

from .errors import BudgetExceededError, PreconditionError

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 10_000
BUDGET_ENV_VAR = 'GALOIS_KIT_BUDGET'

Values = Tuple[int, ...]


def resolve_budget(budget: Optional[int] = None) -> int:
    """
    Determines the active enumeration budget. An explicit value wins over the environment
    variable `GALOIS_KIT_BUDGET`, which wins over `DEFAULT_BUDGET`.

    :param budget: Explicit budget or None.
    :raises PreconditionError: If the budget is not a positive integer.
    :return: Maximal number of rows an enumeration may produce.
    """
    if budget is None:
        raw = os.environ.get(BUDGET_ENV_VAR)
        if raw is None:
            return DEFAULT_BUDGET
        try:
            budget = int(raw)
        except ValueError as error:
            raise PreconditionError(
                f'{BUDGET_ENV_VAR} must be an integer, got "{raw}"') from error
    if budget <= 0:
        raise PreconditionError(f'The budget must be positive, got {budget}')
    return budget


def check_budget(carrier_size: int, length: int, budget: Optional[int] = None) -> int:
    """
    Verifies that |A|^length rows fit into the budget.

    :param carrier_size: Number of lattice elements.
    :param length: Number of coordinates.
    :param budget: Explicit budget or None for the configured default.
    :raises BudgetExceededError: If the enumeration is too large.
    :return: Number of rows.
    """
    limit = resolve_budget(budget)
    rows = carrier_size ** length
    if rows > limit:
        raise BudgetExceededError(
            f'Enumerating {carrier_size}^{length} = {rows} vectors exceeds the budget of {limit}')
    return rows


def enumerate_values(carrier_size: int, length: int,
                     budget: Optional[int] = None) -> Iterator[Values]:
    """
    Enumerates all index tuples of the given length in canonical order.

    :param carrier_size: Number of lattice elements.
    :param length: Tuple length.
    :param budget: Explicit budget or None for the configured default.
    :raises BudgetExceededError: If the enumeration is too large.
    """
    rows = check_budget(carrier_size, length, budget)
    logger.debug('Enumerating %d vectors of length %d', rows, length)
    return itertools.product(range(carrier_size), repeat=length)


def rank_of(values: Values, carrier_size: int) -> int:
    """
    Position of an index tuple in the canonical enumeration.
    """
    rank = 0
    for value in values:
        rank = rank * carrier_size + value
    return rank


def first_violation(law: str, cases: Iterable[Tuple],
                    predicate: Callable[..., bool]) -> Optional[Tuple]:
    """
    Searches the cases in order and returns the first one for which the predicate fails.

    :param law: Name of the checked law, used for logging only.
    :param cases: Argument tuples passed to the predicate.
    :param predicate: Law to check.
    :return: The first violating case or None if the law holds for all cases.
    """
    for case in cases:
        if not predicate(*case):
            logger.debug('Law %s violated at %s', law, case)
            return case
    return None
