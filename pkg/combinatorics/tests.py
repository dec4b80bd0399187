import math
from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings
from hypothesis import strategies as st

from secretary_engine.exceptions import DomainError

from .counts import (
    binomial,
    falling_factorial,
    multinomial_count,
    prefix_event_probability,
    prefix_event_table,
)
from .serializers import ProbabilityResultSerializer, ProblemSizeSerializer
from .types import (
    LOG_ZERO,
    CountMode,
    ExtendedCount,
    Probability,
    ProbabilityMode,
    ProblemSize,
)


@st.composite
def prefix_arguments(draw, max_total):
    k = draw(st.integers(min_value=1, max_value=max_total // 2))
    n = draw(st.integers(min_value=2, max_value=max_total // k))
    M = draw(st.integers(min_value=1, max_value=n * k - 1))
    j = draw(st.integers(min_value=1, max_value=n))
    l = draw(st.integers(min_value=1, max_value=k))
    return ProblemSize(n=n, k=k), M, j, l


class FallingFactorialTests(SimpleTestCase):
    def test_single_factor(self):
        self.assertEqual(falling_factorial(4, 1).value, 4)

    def test_empty_product_is_one(self):
        self.assertEqual(falling_factorial(7, 0).value, 1)

    def test_more_factors_than_base_is_zero(self):
        self.assertTrue(falling_factorial(2, 3).is_zero)
        self.assertEqual(falling_factorial(2, 3, CountMode.LOG).log_value, LOG_ZERO)

    def test_log_mode_matches_exact(self):
        count = falling_factorial(170, 60, CountMode.LOG)
        self.assertAlmostEqual(
            count.log_value, math.log(math.perm(170, 60)), delta=1e-10
        )

    def test_rejects_negative_arguments(self):
        with self.assertRaises(DomainError):
            falling_factorial(-1, 0)
        with self.assertRaises(DomainError):
            falling_factorial(3, -2)

    @given(st.integers(min_value=1, max_value=300), st.data())
    @settings(max_examples=100, deadline=None)
    def test_recurrence(self, b, data):
        a = data.draw(st.integers(min_value=1, max_value=b))
        self.assertEqual(
            falling_factorial(b, a).value,
            falling_factorial(b, a - 1).value * (b - a + 1),
        )


class BinomialTests(SimpleTestCase):
    def test_values(self):
        self.assertEqual(binomial(5, 2).value, 10)
        self.assertEqual(binomial(3, 0).value, 1)
        self.assertTrue(binomial(2, 3).is_zero)

    def test_log_mode_uses_shorter_side(self):
        count = binomial(100, 97, CountMode.LOG)
        self.assertAlmostEqual(count.log_value, math.log(161700), delta=1e-12)


class ExtendedCountTests(SimpleTestCase):
    def test_zero_annihilates_in_log_mode(self):
        product = ExtendedCount.from_log(50.0) * ExtendedCount.zero(CountMode.LOG)
        self.assertTrue(product.is_zero)

    def test_mixed_modes_are_rejected(self):
        with self.assertRaises(DomainError):
            ExtendedCount.exact(3) * ExtendedCount.from_log(1.0)

    def test_ratio_in_exact_mode_is_lowest_terms(self):
        ratio = ExtendedCount.exact(4).ratio(ExtendedCount.exact(6))
        self.assertEqual(ratio.as_rational_string(), "2/3")

    def test_ratio_in_log_mode(self):
        ratio = ExtendedCount.from_log(math.log(4.0)).ratio(
            ExtendedCount.from_log(math.log(6.0))
        )
        self.assertAlmostEqual(ratio.value, 2 / 3, delta=1e-12)
        zero = ExtendedCount.zero(CountMode.LOG).ratio(ExtendedCount.one(CountMode.LOG))
        self.assertEqual(zero.value, 0.0)
        with self.assertRaises(ZeroDivisionError):
            ExtendedCount.one(CountMode.LOG).ratio(ExtendedCount.zero(CountMode.LOG))

    def test_log_access_goes_through_log_value(self):
        self.assertFalse(hasattr(ExtendedCount, "log"))
        self.assertEqual(ExtendedCount.one(CountMode.LOG).log_value, 0.0)


class ProbabilityTests(SimpleTestCase):
    def test_rejects_out_of_range(self):
        with self.assertRaises(DomainError):
            Probability.exact(Fraction(3, 2))
        with self.assertRaises(DomainError):
            Probability.from_float(1.1)
        with self.assertRaises(DomainError):
            Probability.from_float(float("nan"))

    def test_clamps_rounding_overshoot(self):
        self.assertEqual(Probability.from_float(1.0 + 1e-15).float_value, 1.0)
        self.assertEqual(Probability.from_float(-1e-15).float_value, 0.0)

    def test_orders_across_modes(self):
        self.assertLess(Probability.exact(Fraction(1, 3)), Probability.from_float(0.5))
        self.assertEqual(Probability.exact(Fraction(1, 2)), 0.5)


class ProblemSizeTests(SimpleTestCase):
    def test_rejects_nonpositive(self):
        for n, k in [(0, 1), (1, 0), (-2, 3), (True, 2)]:
            with self.subTest(n=n, k=k), self.assertRaises(DomainError):
                ProblemSize(n=n, k=k)

    def test_multinomial_count(self):
        self.assertEqual(multinomial_count(ProblemSize(n=2, k=2)), 6)
        self.assertEqual(multinomial_count(ProblemSize(n=3, k=2)), 90)
        self.assertEqual(multinomial_count(ProblemSize(n=4, k=1)), 24)


class PrefixEventTests(SimpleTestCase):
    def test_known_values(self):
        size = ProblemSize(n=2, k=2)
        self.assertEqual(prefix_event_probability(size, 1, 1, 1), Fraction(1, 2))
        self.assertEqual(prefix_event_probability(size, 1, 2, 1), Fraction(1, 2))

    def test_impossible_event_is_exact_zero(self):
        size = ProblemSize(n=3, k=2)
        self.assertEqual(prefix_event_probability(size, 5, 1, 1).rational, 0)
        self.assertEqual(
            prefix_event_probability(size, 5, 1, 1, ProbabilityMode.FLOAT).float_value,
            0.0,
        )

    def test_rejects_out_of_range_arguments(self):
        size = ProblemSize(n=2, k=2)
        for M, j, l in [(0, 1, 1), (4, 1, 1), (1, 0, 1), (1, 3, 1), (1, 1, 3)]:
            with self.subTest(M=M, j=j, l=l), self.assertRaises(DomainError):
                prefix_event_probability(size, M, j, l)

    def test_partition_identity(self):
        for total in range(2, 13):
            for k in range(1, total + 1):
                if total % k:
                    continue
                size = ProblemSize(n=total // k, k=k)
                for M in range(1, total):
                    with self.subTest(size=str(size), M=M):
                        table = prefix_event_table(size, M)
                        self.assertEqual(
                            sum((p.rational for p in table.values()), Fraction(0)), 1
                        )

    @given(prefix_arguments(max_total=200))
    @settings(max_examples=200, deadline=None)
    def test_modes_agree(self, arguments):
        size, M, j, l = arguments
        exact = prefix_event_probability(size, M, j, l, ProbabilityMode.EXACT)
        approx = prefix_event_probability(size, M, j, l, ProbabilityMode.FLOAT)
        if exact.rational == 0:
            self.assertEqual(approx.float_value, 0.0)
        else:
            relative = abs(approx.float_value - float(exact.rational)) / float(
                exact.rational
            )
            self.assertLessEqual(relative, 1e-10)


class SerializerTests(SimpleTestCase):
    def test_size_serializer_builds_problem_size(self):
        serializer = ProblemSizeSerializer(data={"n": "3", "k": "2"})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data["size"], ProblemSize(n=3, k=2))

    def test_size_serializer_rejects_zero(self):
        serializer = ProblemSizeSerializer(data={"n": 0, "k": 2})
        self.assertFalse(serializer.is_valid())
        self.assertIn("n", serializer.errors)

    def test_probability_result(self):
        data = ProbabilityResultSerializer(Probability.exact(Fraction(10, 12))).data
        self.assertEqual(data["probability"], "5/6")
        self.assertAlmostEqual(data["value"], 5 / 6)
        self.assertEqual(data["mode"], "exact")

        data = ProbabilityResultSerializer(Probability.from_float(0.25)).data
        self.assertIsNone(data["probability"])
        self.assertEqual(data["mode"], "float")
