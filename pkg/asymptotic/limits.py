"""
Limits of the win probabilities when M_n ~ c k n and n -> infinity.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from finite.strategies import StrategyKind, parse_kind
from secretary_engine.exceptions import DomainError

from .series import (
    DEFAULT_POLICY,
    SeriesEvalPolicy,
    g_series,
    integral_terms,
    one_minus_power,
)

logger = logging.getLogger(__name__)

SQRT3 = math.sqrt(3.0)

# Relative slack, in steps, for stop to count as a grid point
GRID_SNAP = 1e-9


@dataclass(frozen=True)
class LimitQuery:
    """
    Point of asymptotic evaluation.

    Attributes:
        k (int): Copies per rank
        c (float): Limiting fraction M_n / (kn), strictly inside (0, 1)
    """

    k: int
    c: float

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise DomainError(f"k must be a positive integer, got {self.k!r}")
        c = float(self.c)
        if not 0.0 < c < 1.0:
            raise DomainError(f"c must lie strictly inside (0, 1), got {self.c}")
        object.__setattr__(self, "c", c)


def _validate_c(c: float) -> float:
    c = float(c)
    if not 0.0 < c < 1.0:
        raise DomainError(f"c must lie strictly inside (0, 1), got {c}")
    return c


def log_one_minus_survival(k: int, c: float) -> float:
    """ln(1 - (1-c)^k), accurate near both ends of (0, 1)."""
    survival = (1.0 - c) ** k
    if survival < 0.5:
        return math.log1p(-survival)
    return math.log(one_minus_power(1.0 - c, k))


def limit_inclusive(
    query: LimitQuery, policy: Optional[SeriesEvalPolicy] = None
) -> float:
    """
    Limiting win probability of the inclusive strategy.

    Three parts: -(1-c)^k sum C(k,l) (c/(1-c))^l l/(k-l), then
    k sum C(k,l) c^l times the integral of y^(k-l-1)/(1-y^k) over [0, 1-c],
    then -c^k ln(1 - (1-c)^k). The sums run over l = 1, ..., k-1.
    """
    policy = policy or DEFAULT_POLICY
    k, c = query.k, query.c
    x = 1.0 - c

    first = 0.0
    second = 0.0
    if k > 1:
        ls = np.arange(1, k)
        weights = np.array([math.comb(k, l) for l in range(1, k)], dtype=np.float64)
        # (1-c)^k (c/(1-c))^l written as c^l (1-c)^(k-l)
        mass = weights * c**ls * x ** (k - ls)
        first = -float((mass * ls / (k - ls)).sum())
        second = k * float((weights * c**ls * integral_terms(k, x, policy)).sum())

    third = -(c**k) * log_one_minus_survival(k, c)
    return first + second + third


def limit_inclusive_closed_k2(c: float) -> float:
    """Closed form for k = 2: -2c(1-c) + (2c - c^2) ln(2-c) - (2c + c^2) ln c."""
    c = _validate_c(c)
    return (
        -2.0 * c * (1.0 - c)
        + (2.0 * c - c * c) * math.log(2.0 - c)
        - (2.0 * c + c * c) * math.log(c)
    )


def limit_inclusive_closed_k3(c: float) -> float:
    """Closed form for k = 3, from partial fractions of 1/(1 - y^3)."""
    c = _validate_c(c)
    c2 = c * c
    c3 = c2 * c
    return (
        -1.5 * (1.0 - c) * c * (1.0 + 3.0 * c)
        - (3.0 * c + 3.0 * c2 + c3) * math.log(c)
        + (1.5 * c + 1.5 * c2 - c3) * math.log(c2 - 3.0 * c + 3.0)
        + 3.0 * SQRT3 * (c2 - c) * math.atan((3.0 - 2.0 * c) / SQRT3)
        + SQRT3 * math.pi / 2.0 * (c - c2)
    )


def limit_strict(query: LimitQuery) -> float:
    """
    Limiting win probability of the strict strategy: -u ln u with
    u = 1 - (1-c)^k.
    """
    k, c = query.k, query.c
    u = one_minus_power(1.0 - c, k)
    return -u * log_one_minus_survival(k, c)


def limit_boundary_extension(k: int, c: float, kind: str) -> float:
    """
    Continuous extension of either limit to c in {0, 1}; both vanish there.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    if c not in (0, 1):
        raise DomainError(f"Boundary extension is defined at c = 0 or 1, got {c}")
    parse_kind(kind)
    return 0.0


def limit_value(
    k: int, c: float, kind: str, policy: Optional[SeriesEvalPolicy] = None
) -> float:
    """Limit for either strategy kind, including the endpoints of [0, 1]."""
    kind = parse_kind(kind)
    if c in (0, 1):
        return limit_boundary_extension(k, c, kind)

    query = LimitQuery(k=k, c=c)
    if kind == StrategyKind.INCLUSIVE:
        return limit_inclusive(query, policy)
    return limit_strict(query)


def limit_inclusive_via_g(
    query: LimitQuery, policy: SeriesEvalPolicy = DEFAULT_POLICY
) -> float:
    """
    The inclusive limit before the series were closed up:

        k sum_{l=1..k} C(k,l) r^l G_{k,l}(1-c) + (1-c)^k sum_{l=1..k-1} C(k,l) r^l

    with r = c / (1-c), each G summed directly.
    """
    k, c = query.k, query.c
    x = 1.0 - c
    ratio = c / x

    series_part = k * math.fsum(
        math.comb(k, l) * ratio**l * g_series(k, l, x, policy) for l in range(1, k + 1)
    )
    boundary_part = x**k * math.fsum(
        math.comb(k, l) * ratio**l for l in range(1, k)
    )
    return series_part + boundary_part


def limit_strict_via_g(
    query: LimitQuery, policy: SeriesEvalPolicy = DEFAULT_POLICY
) -> float:
    """
    The strict limit as k sum_{l=1..k} C(k,l) r^l times G_{k,k}(1-c),
    with r = c / (1-c).
    """
    k, c = query.k, query.c
    x = 1.0 - c
    ratio = c / x
    weight = k * math.fsum(math.comb(k, l) * ratio**l for l in range(1, k + 1))
    return weight * g_series(k, k, x, policy)


def limit_curve(
    k: int,
    kind: str,
    step: float = 0.01,
    start: float = 0.0,
    stop: float = 1.0,
    policy: Optional[SeriesEvalPolicy] = None,
) -> List[Tuple[float, float]]:
    """
    (c, limit) pairs at ``start + i * step`` up to ``stop``.

    ``stop`` is included only when it lies on the grid. Endpoints 0 and 1
    use the continuous extension.
    """
    if not step > 0:
        raise DomainError(f"step must be positive, got {step}")
    if not 0.0 <= start < stop <= 1.0:
        raise DomainError(
            f"Grid must satisfy 0 <= start < stop <= 1, got [{start}, {stop}]"
        )

    steps = (stop - start) / step
    points = int(math.floor(steps + GRID_SNAP)) + 1
    grid = np.minimum(np.round(start + step * np.arange(points), 12), stop)
    logger.debug("Evaluating %s limit curve for k=%d on %d points", kind, k, points)
    return [(float(c), limit_value(k, float(c), kind, policy)) for c in grid]
