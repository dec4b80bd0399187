"""
Power series behind the n -> infinity limits.

All series here have the shape

    S_a(x) = sum over m >= 0 of x^(mk + a) / (mk + a),   a >= 1, 0 <= x < 1,

whose tail after T terms is bounded by x^(Tk + a) / ((Tk + a)(1 - x^k)).
Evaluation stops once that bound is below the policy's absolute tolerance.
"""

import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import integrate, special

from secretary_engine.exceptions import DomainError, ToleranceNotReachedError

logger = logging.getLogger(__name__)

# Array elements (terms x offsets) evaluated per numpy block
_MAX_BLOCK_ELEMENTS = 1 << 20

# From here up to 1 the integral terms split off their logarithmic singularity
# at y = 1 instead of summing the slowly converging series.
SINGULAR_SPLIT_X = 0.9


@dataclass(frozen=True)
class SeriesEvalPolicy:
    """
    Truncation policy for the power series.

    Attributes:
        abs_tol (float): Stop once the tail bound falls below this
        max_terms (int): Give up (ToleranceNotReachedError) beyond this many terms
    """

    abs_tol: float = 1e-14
    max_terms: int = 10**6

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise DomainError(f"abs_tol must be positive, got {self.abs_tol}")
        if isinstance(self.max_terms, bool) or self.max_terms < 1:
            raise DomainError(f"max_terms must be positive, got {self.max_terms}")


DEFAULT_POLICY = SeriesEvalPolicy()


def _validate_x(x: float) -> float:
    x = float(x)
    if not 0.0 <= x < 1.0:
        raise DomainError(f"x must lie in [0, 1), got {x}")
    return x


def _validate_k(k: int, minimum: int = 1) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < minimum:
        raise DomainError(f"k must be an integer >= {minimum}, got {k!r}")


def _validate_l(k: int, l: int, upper: int) -> None:
    if isinstance(l, bool) or not isinstance(l, int) or not 1 <= l <= upper:
        raise DomainError(f"l must lie in [1, {upper}] for k={k}, got {l!r}")


def one_minus_power(x: float, k: int) -> float:
    """1 - x^k without cancellation for x close to 1."""
    if x == 0.0:
        return 1.0
    return -math.expm1(k * math.log(x))


def _terms_needed(k: int, smallest_offset: int, log_x: float, gap: float, tol: float):
    # Solve x^(Tk + a) / (1 - x^k) < tol for T; the dropped 1/(Tk + a) <= 1
    # keeps the estimate conservative.
    target = math.log(tol * gap)
    needed = (target - smallest_offset * log_x) / (k * log_x)
    return max(1, math.ceil(needed))


def offset_power_series(
    k: int,
    offsets: Sequence[int],
    x: float,
    policy: SeriesEvalPolicy = DEFAULT_POLICY,
) -> np.ndarray:
    """
    Evaluate S_a(x) for every offset a at once.

    Args:
        k: Exponent step
        offsets: Positive integer offsets a
        x: Point in [0, 1)
        policy: Truncation policy

    Returns:
        Array of series values, one per offset

    Raises:
        ToleranceNotReachedError: The tail bound needs more than max_terms terms
    """
    offsets = np.asarray(offsets, dtype=np.float64)
    if x == 0.0 or offsets.size == 0:
        return np.zeros(offsets.shape)

    log_x = math.log(x)
    gap = one_minus_power(x, k)
    needed = _terms_needed(k, int(offsets.min()), log_x, gap, policy.abs_tol)
    if needed > policy.max_terms:
        raise ToleranceNotReachedError(
            f"Series at x={x} needs about {needed} terms; max_terms is "
            f"{policy.max_terms}"
        )

    block_terms = max(1, _MAX_BLOCK_ELEMENTS // offsets.size)
    totals = np.zeros(offsets.shape)
    start = 0
    while True:
        count = min(needed - start, block_terms)
        m = np.arange(start, start + count, dtype=np.float64)[:, np.newaxis]
        exponents = m * k + offsets[np.newaxis, :]
        totals += (np.exp(exponents * log_x) / exponents).sum(axis=0)
        start += count

        if start < needed:
            continue
        next_exponents = start * k + offsets
        tail = np.exp(next_exponents * log_x) / (next_exponents * gap)
        if tail.max() < policy.abs_tol:
            break
        if start >= policy.max_terms:
            raise ToleranceNotReachedError(
                f"Series at x={x} did not reach tolerance {policy.abs_tol} "
                f"within {policy.max_terms} terms"
            )
        needed = min(policy.max_terms, needed * 2)

    logger.debug("Series at x=%r, k=%d summed %d terms", x, k, start)
    return totals


def _bounded_integrand(y: float, k: int, offset: int) -> float:
    # (y^(a-1) - y^(k-1)) / (1 - y^k), which tends to (k-a)/k as y -> 1
    if y >= 1.0:
        return (k - offset) / k
    if y == 0.0:
        return 1.0 if offset == 1 else 0.0
    log_y = math.log(y)
    return (
        math.exp((offset - 1) * log_y)
        * math.expm1((k - offset) * log_y)
        / math.expm1(k * log_y)
    )


def _integral_near_one(k: int, offset: int, x: float, policy: SeriesEvalPolicy):
    """
    S_a(x) for x close to 1, as -ln(1 - x^k)/k plus the bounded remainder.

    Over the whole of [0, 1] the bounded part integrates to
    (psi(1) - psi(a/k)) / k; the short piece over [x, 1] is subtracted.
    """
    singular = -math.log(one_minus_power(x, k)) / k
    whole = (special.digamma(1.0) - special.digamma(offset / k)) / k
    tail, error = integrate.quad(
        _bounded_integrand,
        x,
        1.0,
        args=(k, offset),
        epsabs=policy.abs_tol,
        epsrel=0.0,
    )
    if error > 10 * policy.abs_tol:
        raise ToleranceNotReachedError(
            f"Remainder of S_{offset}({x}) has error {error:g}, above "
            f"{policy.abs_tol:g}"
        )
    return singular + float(whole) - tail


def integral_term(
    k: int, l: int, x: float, policy: SeriesEvalPolicy = DEFAULT_POLICY
) -> float:
    """
    The integral of y^(k-l-1) / (1 - y^k) over [0, x].

    Expanding 1/(1 - y^k) geometrically and integrating term by term gives
    S_(k-l)(x). From SINGULAR_SPLIT_X upward the logarithmic part is taken
    out in closed form, so x may come arbitrarily close to 1.
    """
    _validate_k(k, minimum=2)
    _validate_l(k, l, k - 1)
    x = _validate_x(x)
    if x >= SINGULAR_SPLIT_X:
        return _integral_near_one(k, k - l, x, policy)
    return float(offset_power_series(k, [k - l], x, policy)[0])


def integral_terms(
    k: int, x: float, policy: SeriesEvalPolicy = DEFAULT_POLICY
) -> np.ndarray:
    """``integral_term(k, l, x)`` for l = 1, ..., k-1, in that order."""
    _validate_k(k, minimum=2)
    x = _validate_x(x)
    offsets = [k - l for l in range(1, k)]
    if x >= SINGULAR_SPLIT_X:
        return np.array([_integral_near_one(k, a, x, policy) for a in offsets])
    return offset_power_series(k, offsets, x, policy)


def g_series(
    k: int, l: int, x: float, policy: SeriesEvalPolicy = DEFAULT_POLICY
) -> float:
    """
    G_{k,l}(x) = sum over s >= 1 of x^(k(s+1)) / (k(s+1) - l), summed directly.

    Writing k(s+1) = mk + 2k with m = s - 1 gives x^l * S_(2k-l)(x).
    """
    _validate_k(k)
    _validate_l(k, l, k)
    x = _validate_x(x)
    if x == 0.0:
        return 0.0
    return x**l * float(offset_power_series(k, [2 * k - l], x, policy)[0])


def g_closed_form(
    k: int, l: int, x: float, policy: SeriesEvalPolicy = DEFAULT_POLICY
) -> float:
    """
    G_{k,l}(x) from its antiderivative.

    For l = k it is -(x^k / k) ln(1 - x^k); for l < k it is
    -x^k / (k - l) + x^l * integral_term(k, l, x).
    """
    _validate_k(k)
    _validate_l(k, l, k)
    x = _validate_x(x)
    if x == 0.0:
        return 0.0

    x_k = x**k
    if l == k:
        return -(x_k / k) * math.log(one_minus_power(x, k))
    return -x_k / (k - l) + x**l * integral_term(k, l, x, policy)


def g_function(
    k: int, l: int, x: float, policy: SeriesEvalPolicy = DEFAULT_POLICY
) -> float:
    """
    G_{k,l}(x), cross-checked between the direct series and the closed form.

    Raises:
        ToleranceNotReachedError: Either evaluation runs out of terms, or the
            two disagree by more than ten times the tolerance
    """
    series = g_series(k, l, x, policy)
    closed = g_closed_form(k, l, x, policy)

    allowed = 10 * policy.abs_tol * max(1.0, abs(closed))
    if abs(series - closed) > allowed:
        raise ToleranceNotReachedError(
            f"G_{{{k},{l}}}({x}): series {series!r} and closed form {closed!r} "
            f"differ by more than {allowed:g}"
        )
    return closed
