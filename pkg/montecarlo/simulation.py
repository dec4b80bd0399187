"""
Seeded Monte Carlo estimation of win probabilities.

Trials are cut into fixed-size chunks. Chunk i draws from a generator keyed
by (seed, i), so the win count depends only on (trials, seed, chunk_size)
and never on how chunks are spread over workers.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np
from django.db import models

from combinatorics.types import ProblemSize
from finite.strategies import Strategy
from finite.utils import get_strategy_rule
from secretary_engine.exceptions import DomainError, LengthMismatchError
from secretary_engine.rules import EMPTY_PREFIX_THRESHOLD

logger = logging.getLogger(__name__)

SEED_BOUND = 2**64
DEFAULT_CHUNK_SIZE = 2**14


class SelectionOutcome(models.TextChoices):
    WON = "won", "Won"
    LOST = "lost", "Lost"


@dataclass(frozen=True)
class SimulationConfig:
    """
    Attributes:
        trials (int): Number of independent plays
        seed (int): 64-bit unsigned seed
        chunk_size (int): Plays per independently seeded chunk
    """

    trials: int
    seed: int
    chunk_size: int = DEFAULT_CHUNK_SIZE

    def __post_init__(self):
        for name in ("trials", "chunk_size"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise DomainError(f"{name} must be a positive integer, got {value!r}")
        if (
            isinstance(self.seed, bool)
            or not isinstance(self.seed, int)
            or not 0 <= self.seed < SEED_BOUND
        ):
            raise DomainError(
                f"seed must be a 64-bit unsigned integer, got {self.seed!r}"
            )

    @property
    def chunk_count(self) -> int:
        return math.ceil(self.trials / self.chunk_size)

    def chunk_trials(self, index: int) -> int:
        return min(self.chunk_size, self.trials - index * self.chunk_size)


@dataclass(frozen=True)
class SimulationReport:
    """
    Attributes:
        estimate (float): wins / trials
        std_error (float): sqrt(estimate (1 - estimate) / trials)
        trials (int): Plays performed
        wins (int): Plays that selected a top-rank item
    """

    estimate: float
    std_error: float
    trials: int
    wins: int

    @classmethod
    def from_counts(cls, wins: int, trials: int) -> "SimulationReport":
        estimate = wins / trials
        return cls(
            estimate=estimate,
            std_error=math.sqrt(estimate * (1.0 - estimate) / trials),
            trials=trials,
            wins=wins,
        )


def chunk_generator(seed: int, index: int) -> np.random.Generator:
    """Generator for one chunk, derived from (seed, chunk index) alone."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def sample_arrangements(
    size: ProblemSize, rng: np.random.Generator, count: int
) -> np.ndarray:
    """
    ``count`` independent uniform arrangements as a (count, kn) array.

    Each row is an independent unbiased shuffle of the kn labelled items,
    which makes every distinct multiset arrangement equally likely.
    """
    base = np.asarray(size.sorted_ranks(), dtype=np.int16)
    return rng.permuted(np.tile(base, (count, 1)), axis=1)


def sample_arrangement(size: ProblemSize, rng: np.random.Generator) -> List[int]:
    """One uniformly random arrangement of {1^k, ..., n^k}."""
    return [int(rank) for rank in rng.permutation(size.sorted_ranks())]


def run_strategy(
    sequence: Sequence[int],
    strategy: Strategy,
    size: Optional[ProblemSize] = None,
) -> SelectionOutcome:
    """
    Play a strategy on one arrangement.

    Args:
        sequence: Ranks in arrival order
        strategy: Strategy to play
        size: Problem size; when omitted the top rank is max(sequence)

    Returns:
        WON if the selected item has the top rank, LOST otherwise (including
        when nothing is selected)

    Raises:
        LengthMismatchError: The sequence does not have kn items, or the
            cutoff leaves no item to select
    """
    length = len(sequence)
    if size is not None and length != size.total:
        raise LengthMismatchError(
            f"Sequence has {length} items but {size} needs {size.total}"
        )
    if strategy.cutoff >= length:
        raise LengthMismatchError(
            f"Cutoff {strategy.cutoff} leaves no item in a sequence of {length}"
        )

    top_rank = size.n if size is not None else max(sequence)
    rule = get_strategy_rule(strategy.kind)
    prefix = sequence[: strategy.cutoff]
    threshold = max(prefix) if prefix else EMPTY_PREFIX_THRESHOLD

    for rank in sequence[strategy.cutoff :]:
        if rule.accepts(rank, threshold):
            return SelectionOutcome.WON if rank == top_rank else SelectionOutcome.LOST
    return SelectionOutcome.LOST


def _simulate_chunk(task) -> int:
    size, strategy, seed, index, count = task
    rng = chunk_generator(seed, index)
    block = sample_arrangements(size, rng, count)
    rule = get_strategy_rule(strategy.kind)
    return int(rule.play_block(block, strategy.cutoff, size.n).sum())


def estimate(
    size: ProblemSize,
    strategy: Strategy,
    config: SimulationConfig,
    workers: Optional[int] = None,
) -> SimulationReport:
    """
    Estimate a strategy's win probability by simulation.

    Args:
        size: Problem size
        strategy: Strategy to play
        config: Trials, seed and chunk size
        workers: Worker processes; None uses the configured default

    Returns:
        Report with the estimate, its standard error and the raw counts
    """
    strategy.validate_for(size)
    workers = _resolve_workers(workers)

    tasks = [
        (size, strategy, config.seed, index, config.chunk_trials(index))
        for index in range(config.chunk_count)
    ]
    logger.debug(
        "Simulating %s on %s: %d chunks over %d workers",
        strategy,
        size,
        len(tasks),
        workers,
    )

    if workers == 1 or len(tasks) == 1:
        wins = sum(map(_simulate_chunk, tasks))
    else:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            wins = sum(executor.map(_simulate_chunk, tasks))

    return SimulationReport.from_counts(wins, config.trials)


def _resolve_workers(workers: Optional[int]) -> int:
    if workers is None:
        from django.conf import settings

        workers = (
            getattr(settings, "SIMULATION_WORKERS", 1) if settings.configured else 1
        )
    if isinstance(workers, bool) or not isinstance(workers, int) or workers < 1:
        raise DomainError(f"workers must be a positive integer, got {workers!r}")
    return workers
