import math
from fractions import Fraction

from django.test import SimpleTestCase
from django.urls import reverse
from hypothesis import given, settings
from hypothesis import strategies as st
from rest_framework import status
from rest_framework.test import APISimpleTestCase

from asymptotic.limits import limit_value
from combinatorics.types import ProblemSize
from finite.formulas import win_probability
from finite.strategies import Strategy, StrategyKind
from secretary_engine.exceptions import DomainError

from .search import (
    OptimizationMethod,
    best_c_asymptotic,
    best_cutoff_finite,
    golden_section_maximize,
    strict_optimum_candidates,
)
from .serializers import TableQuerySerializer
from .tables import PUBLISHED_TABLE, TableRow, round_half_even, table_optimal

INV_E = 1.0 / math.e
ALL_K = list(range(1, 26))


class GoldenSectionTests(SimpleTestCase):
    def test_finds_interior_maximum(self):
        arg, value, evaluations = golden_section_maximize(
            lambda x: -((x - 0.3) ** 2), 0.0, 1.0, tol=1e-8
        )
        self.assertAlmostEqual(arg, 0.3, delta=1e-7)
        self.assertAlmostEqual(value, 0.0, delta=1e-13)
        self.assertGreater(evaluations, 10)

    def test_maximum_at_bracket_edge(self):
        arg, _, _ = golden_section_maximize(lambda x: x, 2.0, 3.0, tol=1e-9)
        self.assertAlmostEqual(arg, 3.0, delta=1e-8)

    def test_accepts_reversed_bracket(self):
        arg, _, _ = golden_section_maximize(math.sin, 3.0, 0.0, tol=1e-9)
        self.assertAlmostEqual(arg, math.pi / 2, delta=1e-8)

    def test_rejects_nonpositive_tolerance(self):
        with self.assertRaises(DomainError):
            golden_section_maximize(math.sin, 0.0, 1.0, tol=0)


class BestCutoffFiniteTests(SimpleTestCase):
    def test_known_values(self):
        cases = [
            ((2, 2), "inclusive", 1, Fraction(5, 6)),
            ((2, 2), "strict", 0, Fraction(1, 2)),
            ((1, 4), "inclusive", 0, Fraction(1)),
        ]
        for (n, k), kind, expected_m, expected_p in cases:
            with self.subTest(n=n, k=k, kind=kind):
                result = best_cutoff_finite(ProblemSize(n=n, k=k), kind)
                self.assertEqual(result.arg, expected_m)
                self.assertEqual(result.value, expected_p)
                self.assertEqual(result.method, OptimizationMethod.EXHAUSTIVE_SCAN)
                self.assertEqual(result.tolerance, 0.0)

    def test_rejects_unknown_kind(self):
        with self.assertRaises(DomainError):
            best_cutoff_finite(ProblemSize(n=2, k=2), "greedy")

    @given(
        st.integers(min_value=1, max_value=10),
        st.integers(min_value=1, max_value=4),
        st.sampled_from(StrategyKind.values),
    )
    @settings(max_examples=40, deadline=None)
    def test_no_cutoff_beats_the_optimum(self, n, k, kind):
        size = ProblemSize(n=n, k=k)
        result = best_cutoff_finite(size, kind)
        values = [
            win_probability(size, Strategy(kind=kind, cutoff=m))
            for m in range(size.total)
        ]
        self.assertTrue(all(result.value >= value for value in values))
        self.assertEqual(values.index(max(values)), result.arg)


class BestFractionTests(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.inclusive = {k: best_c_asymptotic(k, "inclusive") for k in ALL_K}
        cls.strict = {k: best_c_asymptotic(k, "strict") for k in ALL_K}

    def test_known_inclusive_optima(self):
        for k, c_star, p_star in [(2, 0.386, 0.701), (10, 0.472, 0.999)]:
            with self.subTest(k=k):
                result = self.inclusive[k]
                self.assertAlmostEqual(result.arg, c_star, delta=0.002)
                self.assertAlmostEqual(result.value, p_star, delta=0.001)
                self.assertEqual(result.method, OptimizationMethod.GRID_REFINE)

    def test_value_is_objective_at_arg(self):
        for k in (2, 5, 12):
            with self.subTest(k=k):
                result = self.inclusive[k]
                self.assertAlmostEqual(
                    result.value, limit_value(k, result.arg, "inclusive"), delta=1e-12
                )

    def test_refinement_never_loses_to_grid(self):
        for k in ALL_K:
            for result in (self.inclusive[k], self.strict[k]):
                with self.subTest(k=k, kind=result.kind):
                    self.assertGreaterEqual(result.value, result.notes["grid_value"])

    def test_strict_optimum_is_one_over_e(self):
        for k in ALL_K:
            with self.subTest(k=k):
                result = self.strict[k]
                expected_c = strict_optimum_candidates(k)["u_substitution_c"]
                self.assertAlmostEqual(result.value, INV_E, delta=1e-8)
                self.assertAlmostEqual(result.arg, expected_c, delta=1e-5)

    def test_strict_notes_name_the_matching_reading(self):
        result = self.strict[3]
        self.assertAlmostEqual(result.arg, 1 - (1 - INV_E) ** (1 / 3), delta=1e-5)
        self.assertEqual(result.notes["agrees_with"], "u_substitution_c")

    def test_inclusive_quality_grows_with_k(self):
        values = [self.inclusive[k].value for k in ALL_K]
        for k, (previous, current) in enumerate(zip(values, values[1:]), start=2):
            with self.subTest(k=k):
                self.assertGreaterEqual(current, previous - 1e-9)

    def test_classical_case(self):
        for result in (self.inclusive[1], self.strict[1]):
            self.assertAlmostEqual(result.arg, INV_E, delta=1e-5)
            self.assertAlmostEqual(result.value, INV_E, delta=1e-10)


class TableTests(SimpleTestCase):
    def test_first_rows(self):
        rows = table_optimal([2, 3, 4], "inclusive")
        self.assertEqual([row.k for row in rows], [2, 3, 4])
        expected = [(0.386, 0.701), (0.413, 0.854), (0.431, 0.928)]
        for row, (c_star, p_star) in zip(rows, expected):
            with self.subTest(k=row.k):
                self.assertAlmostEqual(row.c_star, c_star, delta=0.002)
                self.assertAlmostEqual(row.p_star, p_star, delta=0.001)

    def test_published_rows_up_to_ten(self):
        rows = table_optimal([5, 6, 7, 8, 10])
        for row in rows:
            c_star, p_star = PUBLISHED_TABLE[row.k]
            with self.subTest(k=row.k):
                self.assertAlmostEqual(row.c_star, c_star, delta=0.002)
                self.assertAlmostEqual(row.p_star, p_star, delta=0.001)

    def test_nine_lies_between_its_neighbours(self):
        eight, nine, ten = table_optimal([8, 9, 10])
        self.assertLessEqual(eight.c_star, nine.c_star)
        self.assertLessEqual(nine.c_star, ten.c_star)
        self.assertLessEqual(eight.p_star, nine.p_star)

    def test_large_k_rows_settle(self):
        rows = table_optimal([15, 20, 25])
        for row in rows:
            c_star, _ = PUBLISHED_TABLE[row.k]
            with self.subTest(k=row.k):
                self.assertEqual(row.p_star, 1.0)
                self.assertAlmostEqual(row.c_star, c_star, delta=0.005)

    def test_strict_classical_row(self):
        self.assertEqual(
            table_optimal([1], "strict"), [TableRow(k=1, c_star=0.368, p_star=0.368)]
        )

    def test_rejects_invalid_k(self):
        with self.assertRaises(DomainError):
            table_optimal([2, 0])

    def test_round_half_even(self):
        self.assertEqual(round_half_even(0.0005), 0.0)
        self.assertEqual(round_half_even(0.0015), 0.002)
        self.assertEqual(round_half_even(0.70149), 0.701)

    def test_row_bounds(self):
        with self.assertRaises(DomainError):
            TableRow(k=2, c_star=1.0, p_star=0.5)
        with self.assertRaises(DomainError):
            TableRow(k=2, c_star=0.5, p_star=0.0)


class TableQuerySerializerTests(SimpleTestCase):
    def test_parses_comma_separated_k(self):
        serializer = TableQuerySerializer(data={"k": "2, 3,4"})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data["k"], [2, 3, 4])
        self.assertEqual(serializer.validated_data["strategy"], "inclusive")

    def test_rejects_bad_lists(self):
        for value in ("", "2,x", "0,3", "-1"):
            with self.subTest(value=value):
                serializer = TableQuerySerializer(data={"k": value})
                self.assertFalse(serializer.is_valid())
                self.assertIn("k", serializer.errors)


class OptimizeApiTests(APISimpleTestCase):
    def test_best_cutoff(self):
        response = self.client.get(
            reverse("optimize:best-cutoff"), {"n": 2, "k": 2, "strategy": "inclusive"}
        )
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual(response.data["data"]["argmax"], 1)
        self.assertEqual(response.data["data"]["probability"], "5/6")

    def test_table(self):
        response = self.client.get(reverse("optimize:table"), {"k": "2"})
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        (row,) = response.data["data"]
        self.assertAlmostEqual(row["c_star"], 0.386, delta=0.002)

    def test_table_rejects_bad_k(self):
        response = self.client.get(reverse("optimize:table"), {"k": "2,x"})
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
