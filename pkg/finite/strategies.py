from dataclasses import dataclass

from django.db import models

from combinatorics.types import ProblemSize
from secretary_engine.exceptions import DomainError


class StrategyKind(models.TextChoices):
    """The two threshold families."""

    INCLUSIVE = "inclusive", "Inclusive (rank >= prefix maximum)"
    STRICT = "strict", "Strict (rank > prefix maximum)"


def parse_kind(kind) -> StrategyKind:
    """Coerce a strategy kind, raising DomainError for unknown values."""
    try:
        return StrategyKind(kind)
    except ValueError:
        raise DomainError(
            f"Invalid strategy kind: '{kind}'. Must be 'inclusive' or 'strict'."
        )


@dataclass(frozen=True)
class Strategy:
    """
    Let the first ``cutoff`` items pass, then select by the kind's rule.

    Attributes:
        kind (StrategyKind): Inclusive or strict threshold
        cutoff (int): Number of items allowed to pass, M
    """

    kind: StrategyKind
    cutoff: int

    def __post_init__(self):
        object.__setattr__(self, "kind", parse_kind(self.kind))
        if isinstance(self.cutoff, bool) or not isinstance(self.cutoff, int):
            raise DomainError(f"Cutoff must be an integer, got {self.cutoff!r}")
        if self.cutoff < 0:
            raise DomainError(f"Cutoff must be nonnegative, got {self.cutoff}")

    def validate_for(self, size: ProblemSize) -> None:
        """Ensure 0 <= cutoff <= kn - 1 for the given problem."""
        if self.cutoff > size.total - 1:
            raise DomainError(
                f"Cutoff must lie in [0, {size.total - 1}] for {size}, "
                f"got {self.cutoff}"
            )

    def __str__(self):
        return f"{self.kind.value}(M={self.cutoff})"
