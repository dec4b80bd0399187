from abc import ABC, abstractmethod
from fractions import Fraction

import numpy as np

from combinatorics.types import ProblemSize

# Threshold used when no item has passed: every rank clears it
EMPTY_PREFIX_THRESHOLD = 0


class StrategyRule(ABC):
    """
    Abstract base class for threshold selection rules.

    This provides a modular interface that lets the exact formulas, the
    enumeration oracle and the simulator share one definition of each
    strategy family.
    """

    kind = None

    @abstractmethod
    def accepts(self, rank: int, threshold: int) -> bool:
        """
        Decide whether an arriving item is selected.

        Args:
            rank: Rank of the arriving item
            threshold: Highest rank among the items allowed to pass, or
                EMPTY_PREFIX_THRESHOLD when none passed

        Returns:
            True if the rule selects the item
        """
        pass

    @abstractmethod
    def accepts_array(self, ranks: np.ndarray, thresholds: np.ndarray) -> np.ndarray:
        """
        Vectorized ``accepts`` over a block of arrangements.

        Args:
            ranks: Array of shape (rows, positions)
            thresholds: Array of shape (rows, 1)

        Returns:
            Boolean array shaped like ``ranks``
        """
        pass

    @abstractmethod
    def conditional_win(self, size: ProblemSize, j: int, l: int) -> Fraction:
        """
        Win probability given the prefix event for (j, l).

        Args:
            size: Problem size
            j: Highest rank among the first M items
            l: Number of times rank j appears among them

        Returns:
            The exact conditional probability of selecting a rank-n item
        """
        pass

    def threshold(self, prefix: np.ndarray) -> np.ndarray:
        """Row-wise prefix maximum, with the empty-prefix convention."""
        if prefix.shape[1] == 0:
            return np.full((prefix.shape[0], 1), EMPTY_PREFIX_THRESHOLD)
        return prefix.max(axis=1, keepdims=True)

    def play_block(
        self, arrangements: np.ndarray, cutoff: int, top_rank: int
    ) -> np.ndarray:
        """
        Play the rule on every row of a block of arrangements.

        Returns:
            Boolean array with True where the selected item has the top rank;
            rows with no selection are losses.
        """
        thresholds = self.threshold(arrangements[:, :cutoff])
        tail = arrangements[:, cutoff:]
        selectable = self.accepts_array(tail, thresholds)
        selected_any = selectable.any(axis=1)
        first = selectable.argmax(axis=1)
        selected_rank = tail[np.arange(tail.shape[0]), first]
        return selected_any & (selected_rank == top_rank)
