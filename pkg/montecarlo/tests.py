from collections import Counter

import numpy as np
from django.test import SimpleTestCase
from django.urls import reverse
from rest_framework import status
from rest_framework.test import APISimpleTestCase
from scipy import stats

from combinatorics.types import ProblemSize
from finite.formulas import win_probability
from finite.strategies import Strategy
from secretary_engine.exceptions import DomainError, LengthMismatchError

from .serializers import SimulateQuerySerializer
from .simulation import (
    SimulationConfig,
    SimulationReport,
    chunk_generator,
    estimate,
    run_strategy,
    sample_arrangement,
    sample_arrangements,
)


class RunStrategyTests(SimpleTestCase):
    def test_inclusive_plays(self):
        size = ProblemSize(n=2, k=2)
        self.assertEqual(run_strategy([1, 2, 1, 2], Strategy("inclusive", 1), size), "won")
        self.assertEqual(run_strategy([2, 2, 1, 1], Strategy("inclusive", 2), size), "lost")
        self.assertEqual(run_strategy([2, 1, 1, 2], Strategy("inclusive", 2), size), "won")

    def test_strict_plays(self):
        size = ProblemSize(n=2, k=2)
        self.assertEqual(run_strategy([1, 1, 2, 2], Strategy("strict", 2), size), "won")
        self.assertEqual(run_strategy([1, 2, 1, 2], Strategy("strict", 2), size), "lost")

    def test_no_selection_is_a_loss(self):
        self.assertEqual(run_strategy([3, 3, 1, 2], Strategy("strict", 1)), "lost")

    def test_first_item_when_nothing_passes(self):
        self.assertEqual(run_strategy([2, 1, 1, 2], Strategy("strict", 0)), "won")
        self.assertEqual(run_strategy([1, 2, 1, 2], Strategy("strict", 0)), "lost")

    def test_length_mismatch(self):
        with self.assertRaises(LengthMismatchError):
            run_strategy([1, 2, 1], Strategy("inclusive", 1), ProblemSize(n=2, k=2))
        with self.assertRaises(LengthMismatchError):
            run_strategy([1, 2], Strategy("inclusive", 2))


class SamplerTests(SimpleTestCase):
    def test_single_rank(self):
        rng = np.random.default_rng(0)
        self.assertEqual(sample_arrangement(ProblemSize(n=1, k=3), rng), [1, 1, 1])

    def test_two_distinct_ranks(self):
        rng = np.random.default_rng(1)
        block = sample_arrangements(ProblemSize(n=2, k=1), rng, 100_000)
        frequency = (block[:, 0] == 1).mean()
        sigma = (0.25 / 100_000) ** 0.5
        self.assertLess(abs(frequency - 0.5), 4 * sigma)

    def test_multiset_arrangements_are_uniform(self):
        rng = np.random.default_rng(2)
        block = sample_arrangements(ProblemSize(n=2, k=2), rng, 1_000_000)
        counts = Counter(map(tuple, block.tolist()))
        self.assertEqual(len(counts), 6)

        observed = np.array(sorted(counts.values()))
        expected = np.full(6, 1_000_000 / 6)
        sigma = (1_000_000 * (1 / 6) * (5 / 6)) ** 0.5
        self.assertTrue(np.all(np.abs(observed - expected) < 4 * sigma))
        self.assertGreater(stats.chisquare(observed, expected).pvalue, 1e-4)

    def test_rows_are_multisets(self):
        rng = np.random.default_rng(3)
        block = sample_arrangements(ProblemSize(n=4, k=3), rng, 50)
        np.testing.assert_array_equal(
            np.sort(block, axis=1), np.tile(ProblemSize(n=4, k=3).sorted_ranks(), (50, 1))
        )


class ConfigTests(SimpleTestCase):
    def test_rejects_invalid_values(self):
        for kwargs in (
            {"trials": 0, "seed": 1},
            {"trials": 10, "seed": -1},
            {"trials": 10, "seed": 2**64},
            {"trials": 10, "seed": 1, "chunk_size": 0},
        ):
            with self.subTest(**kwargs), self.assertRaises(DomainError):
                SimulationConfig(**kwargs)

    def test_chunking(self):
        config = SimulationConfig(trials=10, seed=0, chunk_size=4)
        self.assertEqual(config.chunk_count, 3)
        self.assertEqual([config.chunk_trials(i) for i in range(3)], [4, 4, 2])

    def test_chunk_generators_are_reproducible(self):
        first = chunk_generator(7, 3).integers(0, 1000, size=5)
        second = chunk_generator(7, 3).integers(0, 1000, size=5)
        other = chunk_generator(7, 4).integers(0, 1000, size=5)
        np.testing.assert_array_equal(first, second)
        self.assertFalse(np.array_equal(first, other))

    def test_report_from_counts(self):
        report = SimulationReport.from_counts(wins=25, trials=100)
        self.assertEqual(report.estimate, 0.25)
        self.assertAlmostEqual(report.std_error, (0.25 * 0.75 / 100) ** 0.5)


class EstimateTests(SimpleTestCase):
    def test_known_cases(self):
        size = ProblemSize(n=2, k=2)
        config = SimulationConfig(trials=100_000, seed=42)
        for strategy, expected in (
            (Strategy("inclusive", 1), 5 / 6),
            (Strategy("strict", 1), 1 / 2),
        ):
            with self.subTest(strategy=str(strategy)):
                report = estimate(size, strategy, config, workers=1)
                self.assertLess(abs(report.estimate - expected), 4 * report.std_error)

    def test_certain_win(self):
        report = estimate(
            ProblemSize(n=1, k=2),
            Strategy("inclusive", 0),
            SimulationConfig(trials=1000, seed=5),
        )
        self.assertEqual(report.estimate, 1.0)
        self.assertEqual(report.std_error, 0.0)

    def test_agrees_with_exact_values(self):
        cases = [
            ((n, k), kind, M)
            for (n, k) in ((3, 2), (4, 3), (5, 2), (6, 4), (10, 3))
            for kind in ("inclusive", "strict")
            for M in (1, (n * k) // 3)
        ]
        for index, ((n, k), kind, M) in enumerate(cases):
            size = ProblemSize(n=n, k=k)
            strategy = Strategy(kind, M)
            with self.subTest(size=str(size), strategy=str(strategy)):
                exact = win_probability(size, strategy).value
                report = estimate(
                    size, strategy, SimulationConfig(trials=50_000, seed=1000 + index)
                )
                tolerance = 4 * max(report.std_error, (exact * (1 - exact) / 50_000) ** 0.5)
                self.assertLessEqual(abs(report.estimate - exact), tolerance + 1e-12)

    def test_small_sizes_within_four_sigma(self):
        trials = 100_000
        cases = [
            ((n, k), kind, M)
            for (n, k) in (
                (2, 2), (3, 2), (2, 3), (5, 2), (2, 5),
                (3, 3), (4, 2), (10, 1), (2, 4), (5, 1),
            )
            for kind, M in (("inclusive", max(1, n * k // 3)), ("strict", n * k // 2))
        ]
        self.assertEqual(len(cases), 20)
        for index, ((n, k), kind, M) in enumerate(cases):
            size = ProblemSize(n=n, k=k)
            strategy = Strategy(kind, M)
            with self.subTest(size=str(size), strategy=str(strategy)):
                exact = win_probability(size, strategy).value
                report = estimate(
                    size, strategy, SimulationConfig(trials=trials, seed=20_000 + index)
                )
                sigma = (exact * (1 - exact) / trials) ** 0.5
                self.assertLessEqual(abs(report.estimate - exact), 4 * sigma + 1e-12)

    def test_independent_of_worker_count(self):
        size = ProblemSize(n=4, k=3)
        strategy = Strategy("inclusive", 5)
        config = SimulationConfig(trials=40_000, seed=2024, chunk_size=4096)
        reports = [estimate(size, strategy, config, workers=w) for w in (1, 4, 8)]
        self.assertEqual(reports[0], reports[1])
        self.assertEqual(reports[0], reports[2])

    def test_rejects_cutoff_beyond_sequence(self):
        with self.assertRaises(DomainError):
            estimate(
                ProblemSize(n=2, k=2),
                Strategy("inclusive", 4),
                SimulationConfig(trials=10, seed=0),
            )


class SimulateQuerySerializerTests(SimpleTestCase):
    def test_builds_config(self):
        serializer = SimulateQuerySerializer(
            data={"n": 2, "k": 2, "m": 1, "strategy": "strict", "trials": 500, "seed": 9}
        )
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(
            serializer.validated_data["config"], SimulationConfig(trials=500, seed=9)
        )

    def test_rejects_oversized_seed(self):
        serializer = SimulateQuerySerializer(
            data={"n": 2, "k": 2, "m": 1, "strategy": "strict", "seed": 2**64}
        )
        self.assertFalse(serializer.is_valid())
        self.assertIn("seed", serializer.errors)


class SimulateApiTests(APISimpleTestCase):
    def test_reproducible(self):
        query = {"n": 3, "k": 2, "m": 2, "strategy": "strict", "trials": 5000, "seed": 11}
        first = self.client.get(reverse("montecarlo:simulate"), query)
        second = self.client.get(reverse("montecarlo:simulate"), query)
        self.assertEqual(first.status_code, status.HTTP_200_OK)
        self.assertEqual(first.data["data"], second.data["data"])
        self.assertEqual(first.data["data"]["trials"], 5000)
