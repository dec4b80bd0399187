"""
Optimal cutoffs: exhaustive scan at finite n, grid plus golden-section
refinement for the limiting fraction c.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple, Union

import numpy as np
from django.db import models

from asymptotic.limits import limit_value
from asymptotic.series import SeriesEvalPolicy
from combinatorics.types import Probability, ProblemSize
from finite.formulas import win_probability
from finite.strategies import Strategy, StrategyKind, parse_kind
from secretary_engine.exceptions import DomainError

logger = logging.getLogger(__name__)

INV_PHI = (math.sqrt(5) - 1) / 2
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2

GRID_STEP = 1e-3
GRID_LOWER = 1e-6
GRID_UPPER = 1.0 - 1e-6
REFINE_TOL = 1e-7

# Grid points next to c = 0 push the series to ~1e7 terms
OPTIMIZER_POLICY = SeriesEvalPolicy(max_terms=10**8)


class OptimizationMethod(models.TextChoices):
    EXHAUSTIVE_SCAN = "exhaustive_scan", "Exhaustive scan"
    GRID_REFINE = "grid_refine", "Grid and golden-section refinement"


@dataclass
class OptimizationResult:
    """
    Maximizer of a win probability.

    Attributes:
        arg: Optimal cutoff M* (finite scan) or fraction c* (asymptotic)
        value: Objective at ``arg``; a Probability for the finite scan
        method (OptimizationMethod): How the maximum was found
        tolerance (float): Argument tolerance; 0 for the exhaustive scan
        kind (StrategyKind): Strategy family that was optimized
        evaluations (int): Objective evaluations spent
        notes (dict): Method-specific diagnostics
    """

    arg: Union[int, float]
    value: Union[Probability, float]
    method: OptimizationMethod
    tolerance: float
    kind: StrategyKind
    evaluations: int = 0
    notes: Dict[str, object] = field(default_factory=dict)

    @property
    def value_float(self) -> float:
        return float(self.value)


def golden_section_maximize(
    f: Callable[[float], float], lower: float, upper: float, tol: float = REFINE_TOL
) -> Tuple[float, float, int]:
    """
    Golden-section search for the maximum of a unimodal function.

    Args:
        f: Objective
        lower: Left end of the bracket
        upper: Right end of the bracket
        tol: Width of the final bracket

    Returns:
        (argument, value, evaluations) with the argument at the centre of the
        final bracket
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")
    a, b = min(lower, upper), max(lower, upper)
    h = b - a
    if h <= tol:
        mid = (a + b) / 2
        return mid, f(mid), 1

    steps = int(math.ceil(math.log(tol / h) / math.log(INV_PHI)))
    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)
    evaluations = 2

    for _ in range(steps - 1):
        h = INV_PHI * h
        if yc > yd:
            b, d, yd = d, c, yc
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            d = a + INV_PHI * h
            yd = f(d)
        evaluations += 1

    if yc > yd:
        b = d
    else:
        a = c
    mid = (a + b) / 2
    return mid, f(mid), evaluations + 1


def best_cutoff_finite(
    size: ProblemSize, kind: str, mode: Optional[str] = None
) -> OptimizationResult:
    """
    Smallest cutoff maximizing the win probability, by scanning every M.

    Args:
        size: Problem size
        kind: 'inclusive' or 'strict'
        mode: Arithmetic mode passed through to the finite formulas
    """
    kind = parse_kind(kind)
    best_m = 0
    best_value = None
    for m in range(size.total):
        value = win_probability(size, Strategy(kind=kind, cutoff=m), mode)
        if best_value is None or value > best_value:
            best_m, best_value = m, value

    logger.debug("Best %s cutoff for %s is M=%d", kind.value, size, best_m)
    return OptimizationResult(
        arg=best_m,
        value=best_value,
        method=OptimizationMethod.EXHAUSTIVE_SCAN,
        tolerance=0.0,
        kind=kind,
        evaluations=size.total,
    )


def strict_optimum_candidates(k: int) -> Dict[str, float]:
    """
    Two readings of the strict optimum in closed form.

    Maximizing -u ln u at u = 1/e with u = 1 - (1-c)^k gives
    c = 1 - (1 - 1/e)^(1/k). The other reading puts k in the exponent.
    """
    base = 1.0 - 1.0 / math.e
    return {
        "u_substitution_c": 1.0 - base ** (1.0 / k),
        "k_exponent_c": 1.0 - base**k,
    }


def best_c_asymptotic(
    k: int, kind: str, policy: Optional[SeriesEvalPolicy] = None
) -> OptimizationResult:
    """
    Maximize the limiting win probability over c in (0, 1).

    A grid of step 1e-3 on [1e-6, 1 - 1e-6] locates the peak; golden-section
    search then refines it inside the bracket formed by the best grid point's
    neighbours. The refined point is kept only if it does not lose to the
    grid maximum.
    """
    kind = parse_kind(kind)
    policy = policy or OPTIMIZER_POLICY

    def objective(c: float) -> float:
        return limit_value(k, c, kind, policy)

    grid = np.append(np.arange(GRID_LOWER, GRID_UPPER, GRID_STEP), GRID_UPPER)
    values = np.array([objective(float(c)) for c in grid])
    best = int(np.argmax(values))
    grid_arg, grid_value = float(grid[best]), float(values[best])

    lower = float(grid[best - 1]) if best > 0 else GRID_LOWER
    upper = float(grid[best + 1]) if best + 1 < grid.size else GRID_UPPER
    logger.debug(
        "k=%d %s: grid peak %.6f at c=%.6f, refining in [%.6f, %.6f]",
        k,
        kind,
        grid_value,
        grid_arg,
        lower,
        upper,
    )

    arg, value, refine_evaluations = golden_section_maximize(
        objective, lower, upper, REFINE_TOL
    )
    if not lower <= arg <= upper:
        raise AssertionError(f"Refined c={arg} left the bracket [{lower}, {upper}]")
    if value < grid_value:
        logger.warning(
            "k=%d %s: refinement %.12f below grid value %.12f, keeping grid point",
            k,
            kind,
            value,
            grid_value,
        )
        arg, value = grid_arg, grid_value

    notes: Dict[str, object] = {"grid_arg": grid_arg, "grid_value": grid_value}
    if kind == StrategyKind.STRICT:
        candidates = strict_optimum_candidates(k)
        notes.update(candidates)
        notes["agrees_with"] = min(
            candidates, key=lambda name: abs(candidates[name] - arg)
        )

    return OptimizationResult(
        arg=arg,
        value=value,
        method=OptimizationMethod.GRID_REFINE,
        tolerance=REFINE_TOL,
        kind=kind,
        evaluations=grid.size + refine_evaluations,
        notes=notes,
    )
