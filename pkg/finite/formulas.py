"""
Exact finite-n win probabilities for the inclusive and strict strategies.

Both formulas condition on the prefix event A(M, j, l) (rank j tops the first
M items and appears l times there):

    P(win) = sum over j in [n], l in [k] of P(A(M, j, l)) * P(win | A(M, j, l))

The conditional factor comes from the strategy rule; with the inclusive rule
this is exactly the two-term sum with 1/(k(n-j+1)-l) weights, and with the
strict rule the single sum with 1/(n-j) weights.
"""

import logging
import math
from fractions import Fraction
from typing import Optional

from combinatorics.counts import prefix_event_probability
from combinatorics.types import Probability, ProbabilityMode, ProblemSize
from secretary_engine.rules import StrategyRule

from .strategies import Strategy, StrategyKind
from .utils import get_strategy_rule, resolve_mode

logger = logging.getLogger(__name__)


def _first_item_probability(size: ProblemSize, mode: ProbabilityMode) -> Probability:
    # With no item passed, both rules take the first arrival
    if mode == ProbabilityMode.EXACT:
        return Probability.exact(Fraction(1, size.n))
    return Probability.from_float(1.0 / size.n)


def _conditioned_sum(
    size: ProblemSize, cutoff: int, rule: StrategyRule, mode: ProbabilityMode
) -> Probability:
    exact_terms = []
    float_terms = []

    for j in range(1, size.n + 1):
        # Rank j cannot top a prefix of M items when M - l > k(j-1) for all l
        if cutoff - size.k > size.k * (j - 1):
            continue
        for l in range(1, size.k + 1):
            weight = rule.conditional_win(size, j, l)
            if weight == 0:
                continue
            event = prefix_event_probability(size, cutoff, j, l, mode)
            if event == 0:
                continue
            if mode == ProbabilityMode.EXACT:
                exact_terms.append(event.rational * weight)
            else:
                float_terms.append(event.float_value * float(weight))

    if mode == ProbabilityMode.EXACT:
        return Probability.exact(sum(exact_terms, Fraction(0)))
    return Probability.from_float(math.fsum(float_terms))


def _win_probability(
    size: ProblemSize, cutoff: int, kind: StrategyKind, mode: Optional[str]
) -> Probability:
    strategy = Strategy(kind=kind, cutoff=cutoff)
    strategy.validate_for(size)
    chosen = resolve_mode(size, mode)

    if cutoff == 0:
        return _first_item_probability(size, chosen)
    return _conditioned_sum(size, cutoff, get_strategy_rule(kind), chosen)


def win_probability_inclusive(
    size: ProblemSize, M: int, mode: Optional[str] = None
) -> Probability:
    """
    Win probability of the inclusive strategy S(n, k; M).

    Args:
        size: Problem size (n, k)
        M: Cutoff in [0, kn - 1]; M = 0 selects the first item
        mode: 'exact', 'float' or None/'auto' for the configured choice

    Returns:
        Probability of selecting an item of rank n
    """
    return _win_probability(size, M, StrategyKind.INCLUSIVE, mode)


def win_probability_strict(
    size: ProblemSize, M: int, mode: Optional[str] = None
) -> Probability:
    """
    Win probability of the strict strategy S+(n, k; M).

    Args:
        size: Problem size (n, k)
        M: Cutoff in [0, kn - 1]; M = 0 selects the first item
        mode: 'exact', 'float' or None/'auto' for the configured choice

    Returns:
        Probability of selecting an item of rank n
    """
    return _win_probability(size, M, StrategyKind.STRICT, mode)


def win_probability(
    size: ProblemSize, strategy: Strategy, mode: Optional[str] = None
) -> Probability:
    """Win probability for either strategy kind."""
    return _win_probability(size, strategy.cutoff, strategy.kind, mode)
