"""
Exact and log-space combinatorial kernels.

Log-mode falling factorials are sums of the logs of their factors, read from a
cached table of ln(i); they are never formed as differences of log-factorials.
"""

import logging
import math
from functools import lru_cache
from typing import Dict, Tuple

import numpy as np

from secretary_engine.exceptions import DomainError

from .types import (
    CountMode,
    ExtendedCount,
    Probability,
    ProbabilityMode,
    ProblemSize,
    count_mode_for,
)

logger = logging.getLogger(__name__)

# Smallest log table ever built; tables grow by doubling
_MIN_TABLE_SIZE = 1024


def _require_nonnegative_int(name: str, value) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise DomainError(f"{name} must be a nonnegative integer, got {value!r}")


@lru_cache(maxsize=16)
def _log_table(size: int) -> np.ndarray:
    """Return ln(1), ..., ln(size) as a read-only array (index i-1 holds ln i)."""
    logger.debug("Building log table of size %d", size)
    table = np.log(np.arange(1, size + 1, dtype=np.float64))
    table.setflags(write=False)
    return table


def _table_for(upper: int) -> np.ndarray:
    size = _MIN_TABLE_SIZE
    while size < upper:
        size *= 2
    return _log_table(size)


@lru_cache(maxsize=1 << 16)
def log_falling_factorial(b: int, a: int) -> float:
    """
    ln((b)_a) for 1 <= a <= b, summed over the factors b-a+1, ..., b.
    """
    table = _table_for(b)
    return float(table[b - a : b].sum())


def falling_factorial(b: int, a: int, mode: str = CountMode.EXACT) -> ExtendedCount:
    """
    The falling factorial (b)_a = b(b-1)...(b-a+1).

    Returns 1 when a = 0 and 0 when a > b.
    """
    _require_nonnegative_int("b", b)
    _require_nonnegative_int("a", a)

    if a > b:
        return ExtendedCount.zero(mode)
    if a == 0:
        return ExtendedCount.one(mode)
    if CountMode(mode) == CountMode.EXACT:
        return ExtendedCount.exact(math.perm(b, a))
    return ExtendedCount.from_log(log_falling_factorial(b, a))


def binomial(m: int, l: int, mode: str = CountMode.EXACT) -> ExtendedCount:
    """The binomial coefficient (m choose l); 0 when l > m."""
    _require_nonnegative_int("m", m)
    _require_nonnegative_int("l", l)

    if l > m:
        return ExtendedCount.zero(mode)
    if CountMode(mode) == CountMode.EXACT:
        return ExtendedCount.exact(math.comb(m, l))
    # Use the shorter side so both sums stay small
    l = min(l, m - l)
    if l == 0:
        return ExtendedCount.one(mode)
    return ExtendedCount.from_log(
        log_falling_factorial(m, l) - log_falling_factorial(l, l)
    )


def multinomial_count(size: ProblemSize) -> int:
    """Number of distinct arrangements of {1^k, ..., n^k}: (kn)! / (k!)^n."""
    return math.factorial(size.total) // math.factorial(size.k) ** size.n


def _validate_prefix_event(size: ProblemSize, M: int, j: int, l: int) -> None:
    for name, value in (("M", M), ("j", j), ("l", l)):
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"{name} must be an integer, got {value!r}")
    if not 1 <= M <= size.total - 1:
        raise DomainError(f"M must lie in [1, {size.total - 1}] for {size}, got {M}")
    if not 1 <= j <= size.n:
        raise DomainError(f"j must lie in [1, {size.n}], got {j}")
    if not 1 <= l <= size.k:
        raise DomainError(f"l must lie in [1, {size.k}], got {l}")


def prefix_event_probability(
    size: ProblemSize,
    M: int,
    j: int,
    l: int,
    mode: str = ProbabilityMode.EXACT,
) -> Probability:
    """
    Probability that the first M items contain rank j exactly l times and
    nothing above rank j.

    Treating the kn items as distinguishable, this is
    C(M, l) (k)_l (k(j-1))_{M-l} / (kn)_M, and exactly 0 when M-l > k(j-1).
    """
    _validate_prefix_event(size, M, j, l)

    if M - l > size.k * (j - 1) or l > M:
        return Probability.zero(mode)

    count_mode = count_mode_for(mode)
    numerator = (
        binomial(M, l, count_mode)
        * falling_factorial(size.k, l, count_mode)
        * falling_factorial(size.k * (j - 1), M - l, count_mode)
    )
    return numerator.ratio(falling_factorial(size.total, M, count_mode))


def prefix_event_table(
    size: ProblemSize, M: int, mode: str = ProbabilityMode.EXACT
) -> Dict[Tuple[int, int], Probability]:
    """
    Every prefix-event probability for one cutoff, keyed by (j, l).

    The events are disjoint and exhaust the outcomes, so the values sum to 1.
    """
    return {
        (j, l): prefix_event_probability(size, M, j, l, mode)
        for j in range(1, size.n + 1)
        for l in range(1, size.k + 1)
    }
