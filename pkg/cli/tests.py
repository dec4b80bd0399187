import csv
import io
import json
from contextlib import redirect_stderr, redirect_stdout
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from secretary_engine.exceptions import ToleranceNotReachedError

from .base import EXIT_NUMERIC_FAILURE, EXIT_USAGE, render_csv
from .dispatch import dispatch


def run(*argv):
    """Dispatch argv and return (exit status, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        status = dispatch(list(argv))
    return status, out.getvalue(), err.getvalue()


class RecordCommandTests(SimpleTestCase):
    def call(self, name, **options):
        out = io.StringIO()
        call_command(name, stdout=out, **options)
        return json.loads(out.getvalue())

    def test_exact_record(self):
        record = self.call("exact", n=2, k=2, m=1, strategy="inclusive")
        self.assertEqual(record["command"], "exact")
        self.assertEqual(record["result"]["probability"], "5/6")
        self.assertAlmostEqual(record["result"]["value"], 0.8333, delta=1e-4)
        self.assertEqual(record["mode"], "exact")

    def test_inputs_reproduce_the_query(self):
        record = self.call("exact", n=3, k=2, m=2, strategy="strict", mode="float")
        self.assertEqual(
            record["inputs"],
            {"n": 3, "k": 2, "m": 2, "strategy": "strict", "mode": "float"},
        )
        again = self.call("exact", **record["inputs"])
        self.assertEqual(again["result"], record["result"])
        self.assertEqual(record["mode"], "float")

    def test_brute_agrees_with_exact(self):
        brute = self.call("brute", n=3, k=2, m=2, strategy="inclusive")
        exact = self.call("exact", n=3, k=2, m=2, strategy="inclusive")
        self.assertEqual(brute["result"]["probability"], exact["result"]["probability"])

    def test_limit_record(self):
        record = self.call("limit", k=2, c=0.386, strategy="inclusive")
        self.assertAlmostEqual(record["result"]["value"], 0.701, delta=0.001)
        self.assertEqual(record["mode"], "float")

    def test_simulate_record(self):
        record = self.call(
            "simulate", n=2, k=2, m=1, strategy="inclusive", trials=20_000, seed=7
        )
        result = record["result"]
        self.assertEqual(record["mode"], "estimate")
        self.assertEqual(result["trials"], 20_000)
        self.assertLess(abs(result["estimate"] - 5 / 6), 4 * result["std_error"])

    def test_curve_is_a_list_of_points(self):
        record = self.call("curve", k=2, strategy="inclusive", step=0.25)
        self.assertEqual([point["c"] for point in record["result"]], [0, 0.25, 0.5, 0.75, 1])

    def test_invalid_arguments_are_usage_errors(self):
        with self.assertRaises(CommandError) as ctx:
            call_command("exact", n=2, k=2, m=4, strategy="inclusive", stdout=io.StringIO())
        self.assertEqual(ctx.exception.returncode, EXIT_USAGE)

    def test_tolerance_failure(self):
        with mock.patch(
            "cli.management.commands.limit.limit_value",
            side_effect=ToleranceNotReachedError("series did not converge"),
        ):
            with self.assertRaises(CommandError) as ctx:
                call_command(
                    "limit", k=2, c=0.5, strategy="inclusive", stdout=io.StringIO()
                )
        self.assertEqual(ctx.exception.returncode, EXIT_NUMERIC_FAILURE)


class CsvTests(SimpleTestCase):
    def test_table_rows(self):
        out = io.StringIO()
        call_command("table", k="2,3", format="csv", stdout=out)
        rows = list(csv.DictReader(io.StringIO(out.getvalue())))
        self.assertEqual([row["k"] for row in rows], ["2", "3"])
        self.assertAlmostEqual(float(rows[0]["c_star"]), 0.386, delta=0.002)
        self.assertAlmostEqual(float(rows[1]["p_star"]), 0.854, delta=0.001)

    def test_single_record_prefixes_colliding_keys(self):
        text = render_csv(
            {
                "command": "exact",
                "inputs": {"n": 2, "k": 2, "m": 1, "strategy": "inclusive", "mode": "auto"},
                "result": {"probability": "5/6", "value": 0.8, "mode": "exact"},
                "mode": "exact",
            }
        )
        header, row = text.splitlines()
        self.assertEqual(
            header,
            "n,k,m,strategy,mode,probability,value,result_mode,output_mode",
        )
        self.assertEqual(row, "2,2,1,inclusive,auto,5/6,0.8,exact,exact")


class DispatchTests(SimpleTestCase):
    def test_success(self):
        status, out, _ = run(
            "exact", "--n", "2", "--k", "2", "--m", "1", "--strategy", "inclusive"
        )
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(out)["result"]["probability"], "5/6")

    def test_optimize_finite(self):
        status, out, _ = run("optimize", "--finite", "2", "--k", "2", "--strategy", "strict")
        self.assertEqual(status, 0)
        result = json.loads(out)["result"]
        self.assertEqual(result["argmax"], 0)
        self.assertEqual(result["probability"], "1/2")

    def test_unknown_command(self):
        status, out, err = run("frobnicate")
        self.assertEqual(status, EXIT_USAGE)
        self.assertEqual(out, "")
        self.assertIn("frobnicate", err)

    def test_missing_argument(self):
        status, _, _ = run("exact", "--n", "2", "--k", "2", "--strategy", "inclusive")
        self.assertEqual(status, EXIT_USAGE)

    def test_domain_error(self):
        status, _, err = run(
            "brute", "--n", "7", "--k", "2", "--m", "1", "--strategy", "strict"
        )
        self.assertEqual(status, EXIT_USAGE)
        self.assertIn("CommandError", err)

    def test_tolerance_failure(self):
        with mock.patch(
            "cli.management.commands.limit.limit_value",
            side_effect=ToleranceNotReachedError("series did not converge"),
        ):
            status, out, _ = run(
                "limit", "--k", "2", "--c", "0.5", "--strategy", "inclusive"
            )
        self.assertEqual(status, EXIT_NUMERIC_FAILURE)
        self.assertEqual(out, "")

    def test_limit_at_small_fraction(self):
        status, out, _ = run(
            "limit", "--k", "2", "--c", "0.00001", "--strategy", "inclusive"
        )
        self.assertEqual(status, 0)
        self.assertAlmostEqual(json.loads(out)["result"]["value"], 2.24e-4, delta=1e-5)
