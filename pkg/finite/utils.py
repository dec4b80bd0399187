import logging
from typing import Optional

from django.conf import settings

from combinatorics.types import ProbabilityMode, ProblemSize
from secretary_engine.exceptions import DomainError
from secretary_engine.rules import InclusiveRule, StrategyRule, StrictRule

from .strategies import StrategyKind

logger = logging.getLogger(__name__)

# Used when the engine runs without Django settings
DEFAULT_EXACT_MODE_LIMIT = 64
DEFAULT_BRUTE_FORCE_LIMIT = 12

AUTO_MODE = "auto"


def get_strategy_rule(kind: str) -> StrategyRule:
    """
    Factory function to get the rule for a strategy kind.
    """
    kind = str(kind).lower()

    if kind == StrategyKind.INCLUSIVE:
        return InclusiveRule()
    elif kind == StrategyKind.STRICT:
        return StrictRule()
    else:
        raise DomainError(
            f"Invalid strategy kind: '{kind}'. Must be 'inclusive' or 'strict'."
        )


def _setting(name: str, default: int) -> int:
    if settings.configured:
        return getattr(settings, name, default)
    return default


def exact_mode_limit() -> int:
    return _setting("EXACT_MODE_LIMIT", DEFAULT_EXACT_MODE_LIMIT)


def brute_force_limit() -> int:
    return _setting("BRUTE_FORCE_LIMIT", DEFAULT_BRUTE_FORCE_LIMIT)


def resolve_mode(size: ProblemSize, mode: Optional[str] = None) -> ProbabilityMode:
    """
    Pick the arithmetic for a finite evaluation.

    An explicit mode wins; otherwise rationals are used up to the configured
    kn limit and log-space floats beyond it.
    """
    if mode and mode != AUTO_MODE:
        try:
            return ProbabilityMode(mode)
        except ValueError:
            raise DomainError(
                f"Invalid mode: '{mode}'. Must be 'exact', 'float' or 'auto'."
            )

    chosen = (
        ProbabilityMode.EXACT
        if size.total <= exact_mode_limit()
        else ProbabilityMode.FLOAT
    )
    logger.debug("Evaluating %s in %s mode", size, chosen.value)
    return chosen
