from fractions import Fraction

import numpy as np

from combinatorics.types import ProblemSize
from finite.strategies import StrategyKind

from .base import StrategyRule


class InclusiveRule(StrategyRule):
    """
    Select the first later item whose rank is at least the prefix maximum.

    Given that rank j < n tops the prefix l times, k(n-j+1)-l items at or
    above rank j remain and k of them have rank n. When rank n tops the
    prefix, a later rank-n item exists unless all k have already passed.
    """

    kind = StrategyKind.INCLUSIVE

    def accepts(self, rank: int, threshold: int) -> bool:
        return rank >= threshold

    def accepts_array(self, ranks: np.ndarray, thresholds: np.ndarray) -> np.ndarray:
        return ranks >= thresholds

    def conditional_win(self, size: ProblemSize, j: int, l: int) -> Fraction:
        if j < size.n:
            return Fraction(size.k, size.k * (size.n - j + 1) - l)
        return Fraction(1) if l < size.k else Fraction(0)
