import math

import numpy as np
from django.test import SimpleTestCase
from django.urls import reverse
from hypothesis import given, settings
from hypothesis import strategies as st
from rest_framework import status
from rest_framework.test import APISimpleTestCase
from scipy import integrate

from secretary_engine.exceptions import DomainError, ToleranceNotReachedError

from .limits import (
    LimitQuery,
    limit_boundary_extension,
    limit_curve,
    limit_inclusive,
    limit_inclusive_closed_k2,
    limit_inclusive_closed_k3,
    limit_inclusive_via_g,
    limit_strict,
    limit_strict_via_g,
    limit_value,
)
from .serializers import CurveQuerySerializer, LimitQuerySerializer
from .series import (
    SINGULAR_SPLIT_X,
    SeriesEvalPolicy,
    g_closed_form,
    g_function,
    g_series,
    integral_term,
    integral_terms,
    offset_power_series,
)

INV_E = 1.0 / math.e
C_GRID = [round(0.01 * i, 2) for i in range(1, 100)]
X_GRID = [round(0.05 * i, 2) for i in range(20)]
AGREEMENT = 1e-10


class OffsetSeriesTests(SimpleTestCase):
    def test_k1_offset1_is_minus_log(self):
        # sum x^(m+1)/(m+1) = -ln(1-x)
        value = offset_power_series(1, [1], 0.7)[0]
        self.assertAlmostEqual(value, -math.log(0.3), delta=1e-13)

    def test_zero_point(self):
        np.testing.assert_array_equal(offset_power_series(3, [1, 2], 0.0), [0.0, 0.0])

    def test_term_budget(self):
        with self.assertRaises(ToleranceNotReachedError):
            offset_power_series(2, [1], 0.99, SeriesEvalPolicy(max_terms=10))

    def test_policy_validation(self):
        with self.assertRaises(DomainError):
            SeriesEvalPolicy(abs_tol=0)
        with self.assertRaises(DomainError):
            SeriesEvalPolicy(max_terms=0)


class GFunctionTests(SimpleTestCase):
    def test_known_values(self):
        self.assertAlmostEqual(g_function(2, 2, 0.5), 0.0359603, delta=1e-6)
        self.assertAlmostEqual(g_function(2, 1, 0.5), 0.0246531, delta=1e-6)
        self.assertEqual(g_function(3, 1, 0.0), 0.0)

    def test_rejects_out_of_range(self):
        with self.assertRaises(DomainError):
            g_function(2, 3, 0.5)
        with self.assertRaises(DomainError):
            g_function(2, 1, 1.0)
        with self.assertRaises(DomainError):
            g_function(0, 1, 0.5)

    def test_series_matches_closed_form_on_grid(self):
        for k in range(1, 11):
            for l in range(1, k + 1):
                for x in X_GRID:
                    with self.subTest(k=k, l=l, x=x):
                        self.assertAlmostEqual(
                            g_series(k, l, x), g_closed_form(k, l, x), delta=AGREEMENT
                        )

    @given(
        st.integers(min_value=1, max_value=10),
        st.data(),
        st.floats(min_value=0.0, max_value=0.95),
    )
    @settings(max_examples=150, deadline=None)
    def test_series_matches_closed_form(self, k, data, x):
        l = data.draw(st.integers(min_value=1, max_value=k))
        self.assertAlmostEqual(
            g_series(k, l, x), g_closed_form(k, l, x), delta=AGREEMENT
        )


class IntegralTermTests(SimpleTestCase):
    def test_k2_is_atanh(self):
        self.assertAlmostEqual(integral_term(2, 1, 0.5), math.atanh(0.5), delta=1e-9)

    def test_zero_point(self):
        self.assertEqual(integral_term(3, 2, 0.0), 0.0)

    def test_matches_quadrature(self):
        for k, l, x in [(3, 1, 0.6), (4, 3, 0.8), (6, 2, 0.35), (5, 4, 0.95)]:
            with self.subTest(k=k, l=l, x=x):
                expected, _ = integrate.quad(
                    lambda y: y ** (k - l - 1) / (1 - y**k), 0.0, x, epsabs=1e-13
                )
                self.assertAlmostEqual(integral_term(k, l, x), expected, delta=1e-9)

    def test_requires_l_below_k(self):
        with self.assertRaises(DomainError):
            integral_term(2, 2, 0.5)

    def test_split_agrees_with_series_near_threshold(self):
        for k in (2, 3, 7, 10):
            for x in (SINGULAR_SPLIT_X, 0.93, 0.97):
                with self.subTest(k=k, x=x):
                    series = offset_power_series(k, range(1, k), x)
                    split = integral_terms(k, x)
                    np.testing.assert_allclose(split, series[::-1], rtol=0, atol=1e-12)

    def test_close_to_one(self):
        # k = 2 has the closed form atanh(x)
        for c in (1e-5, 1e-8, 1e-12):
            with self.subTest(c=c):
                self.assertAlmostEqual(
                    integral_term(2, 1, 1.0 - c), math.atanh(1.0 - c), delta=1e-9
                )


class InclusiveLimitTests(SimpleTestCase):
    def test_known_values(self):
        self.assertAlmostEqual(
            limit_inclusive(LimitQuery(k=2, c=0.386)), 0.701, delta=0.001
        )
        self.assertAlmostEqual(
            limit_inclusive(LimitQuery(k=2, c=0.5)), 0.6705328, delta=1e-6
        )
        self.assertAlmostEqual(
            limit_inclusive(LimitQuery(k=3, c=0.413)), 0.854, delta=0.001
        )

    def test_closed_forms(self):
        self.assertAlmostEqual(limit_inclusive_closed_k2(0.386), 0.701, delta=0.001)
        self.assertAlmostEqual(limit_inclusive_closed_k2(0.5), 0.6705328, delta=1e-6)

    def test_closed_forms_match_series(self):
        for c in C_GRID:
            with self.subTest(c=c):
                self.assertAlmostEqual(
                    limit_inclusive(LimitQuery(k=2, c=c)),
                    limit_inclusive_closed_k2(c),
                    delta=AGREEMENT,
                )
                self.assertAlmostEqual(
                    limit_inclusive(LimitQuery(k=3, c=c)),
                    limit_inclusive_closed_k3(c),
                    delta=AGREEMENT,
                )

    def test_matches_g_form(self):
        for k in range(1, 11):
            for c in C_GRID[4::10]:
                with self.subTest(k=k, c=c):
                    query = LimitQuery(k=k, c=c)
                    self.assertAlmostEqual(
                        limit_inclusive(query), limit_inclusive_via_g(query), delta=AGREEMENT
                    )

    def test_classical_case(self):
        self.assertAlmostEqual(
            limit_inclusive(LimitQuery(k=1, c=INV_E)), INV_E, delta=1e-12
        )


class SmallFractionTests(SimpleTestCase):
    SMALL_C = (1e-5, 1e-6, 1e-8)

    def test_matches_closed_forms(self):
        for c in self.SMALL_C:
            with self.subTest(c=c):
                self.assertAlmostEqual(
                    limit_value(2, c, "inclusive"),
                    limit_inclusive_closed_k2(c),
                    delta=1e-12,
                )
                self.assertAlmostEqual(
                    limit_value(3, c, "inclusive"),
                    limit_inclusive_closed_k3(c),
                    delta=1e-12,
                )

    def test_vanishes_like_c_log_c(self):
        for k in (2, 5, 25):
            values = [limit_value(k, c, "inclusive") for c in self.SMALL_C]
            for c, value in zip(self.SMALL_C, values):
                with self.subTest(k=k, c=c):
                    self.assertTrue(math.isfinite(value))
                    self.assertGreaterEqual(value, 0.0)
                    self.assertLessEqual(value, 2 * k * c * (math.log(1 / (k * c)) + 1))
                    if c <= 1e-6:
                        self.assertLessEqual(value, 1e-3)
            self.assertEqual(values, sorted(values, reverse=True))


class StrictLimitTests(SimpleTestCase):
    def test_known_values(self):
        self.assertAlmostEqual(limit_strict(LimitQuery(k=1, c=INV_E)), INV_E, delta=1e-9)
        self.assertAlmostEqual(
            limit_strict(LimitQuery(k=2, c=0.2049387)), INV_E, delta=1e-6
        )
        self.assertAlmostEqual(limit_strict(LimitQuery(k=5, c=1e-9)), 0.0, delta=1e-6)

    def test_matches_g_form(self):
        for k in range(1, 11):
            for c in C_GRID[4::10]:
                with self.subTest(k=k, c=c):
                    query = LimitQuery(k=k, c=c)
                    self.assertAlmostEqual(
                        limit_strict(query), limit_strict_via_g(query), delta=AGREEMENT
                    )

    def test_never_exceeds_inclusive(self):
        for k in range(1, 6):
            for c in C_GRID:
                with self.subTest(k=k, c=c):
                    query = LimitQuery(k=k, c=c)
                    self.assertLessEqual(
                        limit_strict(query), limit_inclusive(query) + 1e-12
                    )


class BoundaryTests(SimpleTestCase):
    def test_extension_vanishes(self):
        self.assertEqual(limit_boundary_extension(2, 1, "inclusive"), 0.0)
        self.assertEqual(limit_boundary_extension(3, 0, "inclusive"), 0.0)
        self.assertEqual(limit_boundary_extension(4, 0, "strict"), 0.0)

    def test_extension_rejects_interior_points(self):
        with self.assertRaises(DomainError):
            limit_boundary_extension(2, 0.5, "inclusive")

    def test_query_rejects_endpoints(self):
        for c in (0.0, 1.0, -0.1, 1.5):
            with self.subTest(c=c), self.assertRaises(DomainError):
                LimitQuery(k=2, c=c)

    def test_limit_value_dispatch(self):
        self.assertEqual(limit_value(2, 0, "strict"), 0.0)
        self.assertAlmostEqual(limit_value(2, 0.5, "inclusive"), 0.6705328, delta=1e-6)
        with self.assertRaises(DomainError):
            limit_value(2, 0.5, "greedy")

    def test_near_endpoints_approach_zero(self):
        self.assertLess(limit_value(2, 1 - 1e-9, "inclusive"), 1e-6)
        self.assertLess(limit_value(3, 1e-4, "inclusive"), 1e-2)


class CurveTests(SimpleTestCase):
    def test_grid(self):
        points = limit_curve(2, "inclusive", step=0.25)
        self.assertEqual([c for c, _ in points], [0.0, 0.25, 0.5, 0.75, 1.0])
        self.assertEqual(points[0][1], 0.0)
        self.assertEqual(points[-1][1], 0.0)
        self.assertAlmostEqual(points[2][1], 0.6705328, delta=1e-6)

    def test_step_is_honoured_when_it_does_not_divide_the_range(self):
        points = limit_curve(2, "strict", step=0.3)
        self.assertEqual([c for c, _ in points], [0.0, 0.3, 0.6, 0.9])

        cs = [c for c, _ in limit_curve(3, "inclusive", step=0.07, start=0.1, stop=0.5)]
        self.assertEqual(len(cs), 6)
        self.assertTrue(np.allclose(np.diff(cs), 0.07))
        self.assertLessEqual(cs[-1], 0.5)

    def test_stop_is_kept_when_on_the_grid(self):
        cs = [c for c, _ in limit_curve(2, "strict", step=0.1)]
        self.assertEqual(len(cs), 11)
        self.assertEqual(cs[-1], 1.0)
        self.assertEqual(cs[3], 0.3)

    def test_rejects_bad_grid(self):
        with self.assertRaises(DomainError):
            limit_curve(2, "strict", step=0.0)
        with self.assertRaises(DomainError):
            limit_curve(2, "strict", start=0.6, stop=0.4)


class SerializerTests(SimpleTestCase):
    def test_limit_query(self):
        serializer = LimitQuerySerializer(data={"k": 2, "c": "0.386", "strategy": "strict"})
        self.assertTrue(serializer.is_valid(), serializer.errors)
        self.assertEqual(serializer.validated_data["c"], 0.386)

    def test_limit_query_rejects_c_above_one(self):
        serializer = LimitQuerySerializer(data={"k": 2, "c": 1.5, "strategy": "strict"})
        self.assertFalse(serializer.is_valid())
        self.assertIn("c", serializer.errors)

    def test_curve_query_requires_ordered_bounds(self):
        serializer = CurveQuerySerializer(
            data={"k": 2, "strategy": "inclusive", "start": 0.8, "stop": 0.2}
        )
        self.assertFalse(serializer.is_valid())
        self.assertIn("stop", serializer.errors)

    def test_curve_query_rejects_zero_step(self):
        serializer = CurveQuerySerializer(
            data={"k": 2, "strategy": "inclusive", "step": 0}
        )
        self.assertFalse(serializer.is_valid())
        self.assertIn("step", serializer.errors)


class AsymptoticApiTests(APISimpleTestCase):
    def test_limit(self):
        response = self.client.get(
            reverse("asymptotic:limit"), {"k": 2, "c": 0.5, "strategy": "inclusive"}
        )
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertAlmostEqual(response.data["data"]["value"], 0.6705328, delta=1e-6)

    def test_curve(self):
        response = self.client.get(
            reverse("asymptotic:curve"), {"k": 3, "strategy": "strict", "step": 0.5}
        )
        self.assertEqual(response.status_code, status.HTTP_200_OK)
        self.assertEqual([p["c"] for p in response.data["data"]], [0.0, 0.5, 1.0])

    def test_rejects_c_outside_unit_interval(self):
        response = self.client.get(
            reverse("asymptotic:limit"), {"k": 2, "c": 2, "strategy": "inclusive"}
        )
        self.assertEqual(response.status_code, status.HTTP_400_BAD_REQUEST)
        self.assertIn("c", response.data["errors"])
