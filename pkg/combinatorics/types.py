import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import List, Optional

from django.db import models

from secretary_engine.exceptions import DomainError

# Distinguished log-space zero; never produced by an ordinary finite log
LOG_ZERO = -math.inf

# Float results may overshoot [0, 1] by summation rounding only
FLOAT_SLACK = 1e-12


class CountMode(models.TextChoices):
    """Arithmetic used to hold a count."""

    EXACT = "exact", "Exact integer"
    LOG = "log", "Natural log"


class ProbabilityMode(models.TextChoices):
    """Arithmetic used to hold a probability."""

    EXACT = "exact", "Exact rational"
    FLOAT = "float", "Floating point"


def count_mode_for(mode: str) -> CountMode:
    """Map a probability mode to the count mode that feeds it."""
    if ProbabilityMode(mode) == ProbabilityMode.EXACT:
        return CountMode.EXACT
    return CountMode.LOG


def _require_positive_int(name: str, value) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise DomainError(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class ProblemSize:
    """
    The multiset {1^k, ..., n^k}: n ranks with k items at each rank.

    Attributes:
        n (int): Number of ranks; rank n is the highest
        k (int): Copies of each rank
    """

    n: int
    k: int

    def __post_init__(self):
        _require_positive_int("n", self.n)
        _require_positive_int("k", self.k)

    @property
    def total(self) -> int:
        """Number of items, kn."""
        return self.k * self.n

    def sorted_ranks(self) -> List[int]:
        """The multiset in nondecreasing order."""
        return [rank for rank in range(1, self.n + 1) for _ in range(self.k)]

    def __str__(self):
        return f"n={self.n}, k={self.k}"


@dataclass(frozen=True)
class ExtendedCount:
    """
    A nonnegative integer held exactly or as its natural log.

    Attributes:
        mode (CountMode): Which of the two fields is meaningful
        value (int): The count itself (exact mode)
        log_value (float): ln of the count, LOG_ZERO for zero (log mode)
    """

    mode: CountMode
    value: int = 0
    log_value: float = LOG_ZERO

    @classmethod
    def exact(cls, value: int) -> "ExtendedCount":
        if value < 0:
            raise DomainError(f"Counts are nonnegative, got {value}")
        return cls(mode=CountMode.EXACT, value=value)

    @classmethod
    def from_log(cls, log_value: float) -> "ExtendedCount":
        return cls(mode=CountMode.LOG, log_value=log_value)

    @classmethod
    def zero(cls, mode: str) -> "ExtendedCount":
        if CountMode(mode) == CountMode.EXACT:
            return cls.exact(0)
        return cls.from_log(LOG_ZERO)

    @classmethod
    def one(cls, mode: str) -> "ExtendedCount":
        if CountMode(mode) == CountMode.EXACT:
            return cls.exact(1)
        return cls.from_log(0.0)

    @property
    def is_zero(self) -> bool:
        if self.mode == CountMode.EXACT:
            return self.value == 0
        return self.log_value == LOG_ZERO

    def _check_mode(self, other: "ExtendedCount") -> None:
        if self.mode != other.mode:
            raise DomainError(
                f"Cannot combine {self.mode} and {other.mode} counts"
            )

    def __mul__(self, other: "ExtendedCount") -> "ExtendedCount":
        self._check_mode(other)
        if self.mode == CountMode.EXACT:
            return ExtendedCount.exact(self.value * other.value)
        # Zero annihilates; never let -inf meet +inf arithmetic
        if self.is_zero or other.is_zero:
            return ExtendedCount.from_log(LOG_ZERO)
        return ExtendedCount.from_log(self.log_value + other.log_value)

    def ratio(self, other: "ExtendedCount") -> "Probability":
        """Return self / other as a probability in the matching mode."""
        self._check_mode(other)
        if other.is_zero:
            raise ZeroDivisionError("ratio with a zero denominator")
        if self.mode == CountMode.EXACT:
            return Probability.exact(Fraction(self.value, other.value))
        if self.is_zero:
            return Probability.from_float(0.0)
        return Probability.from_float(math.exp(self.log_value - other.log_value))


@total_ordering
@dataclass(frozen=True, eq=False)
class Probability:
    """
    A probability held as an exact rational or a float.

    Attributes:
        mode (ProbabilityMode): exact or float
        rational (Fraction): Lowest-terms value (exact mode)
        float_value (float): Value in [0, 1] (float mode)
    """

    mode: ProbabilityMode
    rational: Optional[Fraction] = None
    float_value: Optional[float] = None

    def __post_init__(self):
        if self.mode == ProbabilityMode.EXACT:
            if self.rational is None or not 0 <= self.rational <= 1:
                raise DomainError(f"Probability out of range: {self.rational}")
            return

        value = self.float_value
        if value is None or math.isnan(value):
            raise DomainError(f"Probability out of range: {value}")
        if -FLOAT_SLACK <= value < 0.0:
            object.__setattr__(self, "float_value", 0.0)
        elif 1.0 < value <= 1.0 + FLOAT_SLACK:
            object.__setattr__(self, "float_value", 1.0)
        elif not 0.0 <= value <= 1.0:
            raise DomainError(f"Probability out of range: {value}")

    @classmethod
    def exact(cls, value) -> "Probability":
        return cls(mode=ProbabilityMode.EXACT, rational=Fraction(value))

    @classmethod
    def from_float(cls, value: float) -> "Probability":
        return cls(mode=ProbabilityMode.FLOAT, float_value=float(value))

    @classmethod
    def zero(cls, mode: str) -> "Probability":
        if ProbabilityMode(mode) == ProbabilityMode.EXACT:
            return cls.exact(0)
        return cls.from_float(0.0)

    @property
    def is_exact(self) -> bool:
        return self.mode == ProbabilityMode.EXACT

    @property
    def value(self) -> float:
        """The probability as a float, whatever the mode."""
        if self.is_exact:
            return float(self.rational)
        return self.float_value

    def as_rational_string(self) -> Optional[str]:
        """'numerator/denominator' in lowest terms, or None in float mode."""
        if not self.is_exact:
            return None
        return f"{self.rational.numerator}/{self.rational.denominator}"

    def _key(self):
        return self.rational if self.is_exact else self.float_value

    def __float__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, Probability):
            return self._key() == other._key()
        if isinstance(other, (int, float, Fraction)):
            return self._key() == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Probability):
            return self._key() < other._key()
        if isinstance(other, (int, float, Fraction)):
            return self._key() < other
        return NotImplemented

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return self.as_rational_string() or repr(self.float_value)
