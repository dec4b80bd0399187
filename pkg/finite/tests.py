import math
from fractions import Fraction

from django.test import SimpleTestCase, override_settings
from django.urls import reverse
from hypothesis import given, settings
from hypothesis import strategies as st
from rest_framework import status
from rest_framework.test import APISimpleTestCase

from combinatorics.types import ProbabilityMode, ProblemSize
from secretary_engine.exceptions import DomainError, EnumerationLimitError

from .enumeration import (
    brute_force_win_probabilities,
    brute_force_win_probability,
    iter_arrangement_blocks,
    next_permutation,
)
from .formulas import (
    win_probability,
    win_probability_inclusive,
    win_probability_strict,
)
from .serializers import ExactQuerySerializer
from .strategies import Strategy, StrategyKind
from .utils import resolve_mode


def _event(n, k, M, j, l):
    # C(M, l) (k)_l (k(j-1))_{M-l} / (kn)_M, written out independently
    if M - l < 0 or M - l > k * (j - 1):
        return Fraction(0)
    return Fraction(
        math.comb(M, l) * math.perm(k, l) * math.perm(k * (j - 1), M - l),
        math.perm(k * n, M),
    )


def closed_inclusive(n, k, M):
    first = sum(_event(n, k, M, n, l) for l in range(1, k))
    second = k * sum(
        _event(n, k, M, j, l) / (k * (n - j + 1) - l)
        for j in range(1, n)
        for l in range(1, k + 1)
    )
    return first + second


def closed_strict(n, k, M):
    return sum(
        _event(n, k, M, j, l) / (n - j) for j in range(1, n) for l in range(1, k + 1)
    )


def sizes_up_to(total):
    for n in range(1, total + 1):
        for k in range(1, total // n + 1):
            yield ProblemSize(n=n, k=k)


class StrategyTests(SimpleTestCase):
    def test_rejects_unknown_kind(self):
        with self.assertRaises(DomainError):
            Strategy(kind="greedy", cutoff=1)

    def test_rejects_negative_cutoff(self):
        with self.assertRaises(DomainError):
            Strategy(kind=StrategyKind.STRICT, cutoff=-1)

    def test_cutoff_must_leave_an_item(self):
        with self.assertRaises(DomainError):
            Strategy(kind="inclusive", cutoff=4).validate_for(ProblemSize(n=2, k=2))

    def test_str(self):
        self.assertEqual(str(Strategy(kind="inclusive", cutoff=3)), "inclusive(M=3)")


class InclusiveFormulaTests(SimpleTestCase):
    def test_known_values(self):
        cases = [((2, 2), 1, Fraction(5, 6)), ((1, 3), 2, 1), ((2, 2), 0, Fraction(1, 2))]
        for (n, k), M, expected in cases:
            with self.subTest(n=n, k=k, M=M):
                result = win_probability_inclusive(ProblemSize(n=n, k=k), M)
                self.assertTrue(result.is_exact)
                self.assertEqual(result.rational, expected)

    def test_rejects_out_of_range_cutoff(self):
        with self.assertRaises(DomainError):
            win_probability_inclusive(ProblemSize(n=2, k=2), 4)
        with self.assertRaises(DomainError):
            win_probability_inclusive(ProblemSize(n=2, k=2), -1)

    def test_matches_closed_sums(self):
        for size in sizes_up_to(16):
            for M in range(1, size.total):
                with self.subTest(size=str(size), M=M):
                    self.assertEqual(
                        win_probability_inclusive(size, M, ProbabilityMode.EXACT).rational,
                        closed_inclusive(size.n, size.k, M),
                    )

    def test_converges_to_limit(self):
        # n = 500, k = 2, M = round(0.386 * 1000)
        result = win_probability_inclusive(ProblemSize(n=500, k=2), 386, "float")
        self.assertFalse(result.is_exact)
        self.assertAlmostEqual(result.value, 0.701, delta=0.01)


class StrictFormulaTests(SimpleTestCase):
    def test_known_values(self):
        cases = [((2, 2), 1, Fraction(1, 2)), ((1, 3), 1, 0), ((2, 2), 0, Fraction(1, 2))]
        for (n, k), M, expected in cases:
            with self.subTest(n=n, k=k, M=M):
                self.assertEqual(
                    win_probability_strict(ProblemSize(n=n, k=k), M).rational, expected
                )

    def test_matches_closed_sums(self):
        for size in sizes_up_to(16):
            for M in range(1, size.total):
                with self.subTest(size=str(size), M=M):
                    self.assertEqual(
                        win_probability_strict(size, M, ProbabilityMode.EXACT).rational,
                        closed_strict(size.n, size.k, M),
                    )

    def test_classical_bridge(self):
        for n in range(1, 30):
            size = ProblemSize(n=n, k=1)
            for M in range(1, n):
                with self.subTest(n=n, M=M):
                    self.assertEqual(
                        win_probability_inclusive(size, M),
                        win_probability_strict(size, M),
                    )


class ModeTests(SimpleTestCase):
    def test_auto_mode_switches_on_size(self):
        self.assertEqual(resolve_mode(ProblemSize(n=32, k=2)), ProbabilityMode.EXACT)
        self.assertEqual(resolve_mode(ProblemSize(n=33, k=2)), ProbabilityMode.FLOAT)

    def test_explicit_mode_wins(self):
        self.assertEqual(
            resolve_mode(ProblemSize(n=100, k=2), "exact"), ProbabilityMode.EXACT
        )

    @override_settings(EXACT_MODE_LIMIT=4)
    def test_limit_comes_from_settings(self):
        self.assertEqual(resolve_mode(ProblemSize(n=3, k=2)), ProbabilityMode.FLOAT)

    def test_rejects_unknown_mode(self):
        with self.assertRaises(DomainError):
            resolve_mode(ProblemSize(n=2, k=2), "approximate")

    @given(
        st.integers(min_value=1, max_value=12),
        st.integers(min_value=1, max_value=6),
        st.sampled_from(StrategyKind.values),
        st.data(),
    )
    @settings(max_examples=60, deadline=None)
    def test_float_mode_tracks_exact(self, n, k, kind, data):
        size = ProblemSize(n=n, k=k)
        M = data.draw(st.integers(min_value=0, max_value=size.total - 1))
        strategy = Strategy(kind=kind, cutoff=M)
        exact = win_probability(size, strategy, ProbabilityMode.EXACT)
        approx = win_probability(size, strategy, ProbabilityMode.FLOAT)
        self.assertAlmostEqual(approx.value, exact.value, delta=1e-11)
        self.assertTrue(0.0 <= approx.value <= 1.0)


class NextPermutationTests(SimpleTestCase):
    def test_walks_multiset_in_order(self):
        seq = [1, 1, 2, 2]
        seen = [tuple(seq)]
        while next_permutation(seq):
            seen.append(tuple(seq))
        self.assertEqual(
            seen,
            [
                (1, 1, 2, 2),
                (1, 2, 1, 2),
                (1, 2, 2, 1),
                (2, 1, 1, 2),
                (2, 1, 2, 1),
                (2, 2, 1, 1),
            ],
        )

    def test_last_arrangement_is_left_untouched(self):
        seq = [3, 2, 2, 1]
        self.assertFalse(next_permutation(seq))
        self.assertEqual(seq, [3, 2, 2, 1])

    def test_blocks_cover_every_arrangement(self):
        size = ProblemSize(n=3, k=2)
        blocks = list(iter_arrangement_blocks(size, block_size=7))
        self.assertEqual(sum(block.shape[0] for block in blocks), 90)
        self.assertTrue(all(block.shape[1] == 6 for block in blocks))


class BruteForceTests(SimpleTestCase):
    def test_known_values(self):
        size = ProblemSize(n=2, k=2)
        self.assertEqual(
            brute_force_win_probability(size, Strategy("inclusive", 2)), Fraction(5, 6)
        )
        self.assertEqual(
            brute_force_win_probability(size, Strategy("strict", 2)), Fraction(1, 6)
        )
        self.assertEqual(
            brute_force_win_probability(ProblemSize(n=1, k=2), Strategy("inclusive", 0)),
            1,
        )

    def test_enumeration_bound(self):
        with self.assertRaises(EnumerationLimitError):
            brute_force_win_probability(ProblemSize(n=13, k=1), Strategy("strict", 1))

    def test_size_error_is_a_domain_error(self):
        self.assertTrue(issubclass(EnumerationLimitError, DomainError))

    def test_formulas_match_enumeration(self):
        for size in sizes_up_to(10):
            strategies = [
                Strategy(kind=kind, cutoff=M)
                for kind in StrategyKind.values
                for M in range(size.total)
            ]
            enumerated = brute_force_win_probabilities(size, strategies)
            for strategy in strategies:
                with self.subTest(size=str(size), strategy=str(strategy)):
                    self.assertEqual(
                        win_probability(size, strategy, ProbabilityMode.EXACT),
                        enumerated[strategy],
                    )

    def test_inclusive_dominates_strict(self):
        for size in sizes_up_to(10):
            for M in range(size.total):
                with self.subTest(size=str(size), M=M):
                    self.assertGreaterEqual(
                        win_probability_inclusive(size, M),
                        win_probability_strict(size, M),
                    )


class ExactQuerySerializerTests(SimpleTestCase):
    def test_valid_query(self):
        serializer = ExactQuerySerializer(
            data={"n": 2, "k": 2, "m": 1, "strategy": "inclusive"}
        )
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data["mode"], "auto")
        self.assertEqual(
            serializer.validated_data["strategy_obj"], Strategy("inclusive", 1)
        )

    def test_cutoff_beyond_last_item(self):
        serializer = ExactQuerySerializer(
            data={"n": 2, "k": 2, "m": 4, "strategy": "strict"}
        )
        self.assertFalse(serializer.is_valid())
        self.assertIn("m", serializer.errors)

    def test_unknown_strategy(self):
        serializer = ExactQuerySerializer(
            data={"n": 2, "k": 2, "m": 1, "strategy": "greedy"}
        )
        self.assertFalse(serializer.is_valid())
        self.assertIn("strategy", serializer.errors)


class FiniteApiTests(APISimpleTestCase):
    def test_exact_envelope(self):
        response = self.client.get(
            reverse("finite:exact"), {"n": 2, "k": 2, "m": 1, "strategy": "inclusive"}
        )
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertTrue(response.data["success"])
        self.assertEqual(response.data["data"]["probability"], "5/6")
        self.assertEqual(response.data["data"]["mode"], "exact")

    def test_validation_failure(self):
        response = self.client.get(
            reverse("finite:exact"), {"n": 2, "k": 2, "m": 9, "strategy": "inclusive"}
        )
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertFalse(response.data["success"])
        self.assertIn("m", response.data["errors"])

    def test_brute_force_beyond_limit(self):
        response = self.client.get(
            reverse("finite:brute"), {"n": 7, "k": 2, "m": 1, "strategy": "strict"}
        )
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertEqual(response.data["errors"]["type"], "EnumerationLimitError")
