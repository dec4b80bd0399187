import logging
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Dict, Iterable, List, Optional, Tuple

from asymptotic.series import SeriesEvalPolicy
from finite.strategies import StrategyKind, parse_kind
from secretary_engine.exceptions import DomainError

from .search import best_c_asymptotic

logger = logging.getLogger(__name__)

THREE_PLACES = Decimal("0.001")

# Published optimal fraction and limiting probability for the inclusive rule.
# The k = 9 row repeats k = 8 in print.
PUBLISHED_TABLE: Dict[int, Tuple[float, float]] = {
    2: (0.386, 0.701),
    3: (0.413, 0.854),
    4: (0.431, 0.928),
    5: (0.444, 0.964),
    6: (0.453, 0.982),
    7: (0.460, 0.991),
    8: (0.465, 0.996),
    9: (0.465, 0.996),
    10: (0.472, 0.999),
    15: (0.481, 1.000),
    20: (0.486, 1.000),
    25: (0.486, 1.000),
}
PUBLISHED_C_TOLERANCE = 0.002
PUBLISHED_P_TOLERANCE = 0.001


def round_half_even(value: float) -> float:
    return float(Decimal(repr(value)).quantize(THREE_PLACES, rounding=ROUND_HALF_EVEN))


@dataclass(frozen=True)
class TableRow:
    """
    One row of the optimum table, rounded to three decimals.

    Attributes:
        k (int): Copies per rank
        c_star (float): Optimal limiting fraction
        p_star (float): Optimal limiting win probability
    """

    k: int
    c_star: float
    p_star: float

    def __post_init__(self):
        if not 0.0 < self.c_star < 1.0:
            raise DomainError(f"c_star must lie in (0, 1), got {self.c_star}")
        if not 0.0 < self.p_star <= 1.0:
            raise DomainError(f"p_star must lie in (0, 1], got {self.p_star}")

    def as_dict(self) -> dict:
        return {"k": self.k, "c_star": self.c_star, "p_star": self.p_star}


def published_deviation(row: TableRow) -> Optional[Tuple[float, float]]:
    """(|dc|, |dp|) against the published row, or None when k is not listed."""
    published = PUBLISHED_TABLE.get(row.k)
    if published is None:
        return None
    c_pub, p_pub = published
    return abs(row.c_star - c_pub), abs(row.p_star - p_pub)


def table_optimal(
    k_values: Iterable[int],
    kind: str = StrategyKind.INCLUSIVE,
    policy: Optional[SeriesEvalPolicy] = None,
) -> List[TableRow]:
    """
    Optimal c and limiting probability for each k, in input order.

    Inclusive rows are compared with the published values and a warning is
    logged when a row falls outside the published tolerance.
    """
    kind = parse_kind(kind)
    k_values = list(k_values)
    for k in k_values:
        if isinstance(k, bool) or not isinstance(k, int) or k < 1:
            raise DomainError(f"k must be a positive integer, got {k!r}")

    rows = []
    for k in k_values:
        result = best_c_asymptotic(k, kind, policy)
        row = TableRow(
            k=k,
            c_star=round_half_even(result.arg),
            p_star=round_half_even(result.value),
        )
        rows.append(row)

        deviation = published_deviation(row) if kind == StrategyKind.INCLUSIVE else None
        if deviation and (
            deviation[0] > PUBLISHED_C_TOLERANCE or deviation[1] > PUBLISHED_P_TOLERANCE
        ):
            logger.warning(
                "k=%d: computed (%.3f, %.3f) differs from published %s",
                k,
                row.c_star,
                row.p_star,
                PUBLISHED_TABLE[k],
            )
    return rows
