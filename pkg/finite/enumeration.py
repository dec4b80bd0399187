"""
Exhaustive oracle: play strategies on every distinct arrangement of the
multiset {1^k, ..., n^k}.

Every distinct arrangement corresponds to the same number (k!)^n of labelled
orders, so walking the distinct arrangements with equal weight gives the exact
uniform-order probability.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List

import numpy as np

from combinatorics.counts import multinomial_count
from combinatorics.types import Probability, ProblemSize
from secretary_engine.exceptions import EnumerationLimitError

from .strategies import Strategy
from .utils import brute_force_limit, get_strategy_rule

logger = logging.getLogger(__name__)

# Arrangements materialized per numpy block
BLOCK_SIZE = 1 << 15


def next_permutation(seq: List[int]) -> bool:
    """
    Advance ``seq`` in place to its lexicographic successor.

    Repeated values are handled, so starting from the sorted multiset every
    distinct arrangement is visited exactly once.

    Returns:
        False (leaving ``seq`` untouched) when ``seq`` is already the last
        arrangement
    """
    i = len(seq) - 2
    while i >= 0 and seq[i] >= seq[i + 1]:
        i -= 1
    if i < 0:
        return False

    j = len(seq) - 1
    while seq[j] <= seq[i]:
        j -= 1
    seq[i], seq[j] = seq[j], seq[i]
    seq[i + 1 :] = reversed(seq[i + 1 :])
    return True


def iter_arrangement_blocks(
    size: ProblemSize, block_size: int = BLOCK_SIZE
) -> Iterator[np.ndarray]:
    """Yield all distinct arrangements in lexicographic order, in blocks."""
    seq = size.sorted_ranks()
    rows = [tuple(seq)]

    while next_permutation(seq):
        rows.append(tuple(seq))
        if len(rows) == block_size:
            yield np.array(rows, dtype=np.int16)
            rows = []

    if rows:
        yield np.array(rows, dtype=np.int16)


def _check_enumeration_bound(size: ProblemSize) -> None:
    limit = brute_force_limit()
    if size.total > limit:
        raise EnumerationLimitError(
            f"Enumeration is limited to kn <= {limit}; {size} has kn={size.total}"
        )


def brute_force_win_probabilities(
    size: ProblemSize, strategies: Iterable[Strategy]
) -> Dict[Strategy, Probability]:
    """
    Exact win probabilities for several strategies from one enumeration pass.

    Args:
        size: Problem size with kn within the enumeration bound
        strategies: Strategies to play; cutoffs must lie in [0, kn - 1]

    Returns:
        Mapping from each strategy to its exact probability
    """
    _check_enumeration_bound(size)
    strategies = list(dict.fromkeys(strategies))
    for strategy in strategies:
        strategy.validate_for(size)

    rules = {strategy: get_strategy_rule(strategy.kind) for strategy in strategies}
    wins = {strategy: 0 for strategy in strategies}
    arrangements = 0

    for block in iter_arrangement_blocks(size):
        arrangements += block.shape[0]
        for strategy, rule in rules.items():
            wins[strategy] += int(rule.play_block(block, strategy.cutoff, size.n).sum())

    expected = multinomial_count(size)
    if arrangements != expected:
        raise AssertionError(
            f"Enumerated {arrangements} arrangements, expected {expected}"
        )
    logger.debug("Enumerated %d arrangements for %s", arrangements, size)

    return {
        strategy: Probability.exact(Fraction(wins[strategy], arrangements))
        for strategy in strategies
    }


def brute_force_win_probability(size: ProblemSize, strategy: Strategy) -> Probability:
    """
    Exact win probability of one strategy by exhaustive enumeration.

    Raises:
        EnumerationLimitError: kn exceeds the configured enumeration bound
    """
    return brute_force_win_probabilities(size, [strategy])[strategy]
