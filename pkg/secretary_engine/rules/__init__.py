from .base import EMPTY_PREFIX_THRESHOLD, StrategyRule
from .inclusive import InclusiveRule
from .strict import StrictRule

__all__ = [
    "EMPTY_PREFIX_THRESHOLD",
    "StrategyRule",
    "InclusiveRule",
    "StrictRule",
]
