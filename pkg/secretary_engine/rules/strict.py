from fractions import Fraction

import numpy as np

from combinatorics.types import ProblemSize
from finite.strategies import StrategyKind

from .base import StrategyRule


class StrictRule(StrategyRule):
    """
    Select the first later item whose rank exceeds the prefix maximum.

    Given that rank j < n tops the prefix, the first of the k(n-j) items above
    rank j is selected and k of them have rank n, giving 1/(n-j). When rank
    n tops the prefix nothing can exceed it.
    """

    kind = StrategyKind.STRICT

    def accepts(self, rank: int, threshold: int) -> bool:
        return rank > threshold

    def accepts_array(self, ranks: np.ndarray, thresholds: np.ndarray) -> np.ndarray:
        return ranks > thresholds

    def conditional_win(self, size: ProblemSize, j: int, l: int) -> Fraction:
        if j < size.n:
            return Fraction(1, size.n - j)
        return Fraction(0)
