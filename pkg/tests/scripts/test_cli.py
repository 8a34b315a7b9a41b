import contextlib
import io
import json
import os
import subprocess
import sys
import tempfile
import unittest
from unittest import mock

from fusscat.exact import b3_closed, bp_closed, fuss_catalan, stat_index
from fusscat.scripts import enumerate as enumerate_script
from fusscat.scripts import gf, seq, table, verify
from fusscat.utils.export import csv_to_frame

from tests.verify.test_suites import (
    corrupted_build_prime_grid,
    corrupted_build_simplex,
    corrupted_solve_G,
)


def run_script(module, argv):
    """
    :return: (exit code, stdout)
    """
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        try:
            code = module.main(module.parse_args(argv))
        except SystemExit as exc:
            code = exc.code
    return code, out.getvalue()


def int_rows(text):
    return [[int(v) for v in line.split()] for line in text.strip().splitlines()]


def failed_by_check(out):
    """
    :return: Dict[(suite, check), counterexample] of the failed checks
    """
    return {
        (suite["suite"], check["name"]): check["counterexample"]
        for suite in json.loads(out)["suites"]
        for check in suite["checks"]
        if not check["pass"]
    }


class TestTable(unittest.TestCase):
    def test_catalan_triangle(self):
        code, out = run_script(table, ["--p", "2", "--n-max", "6"])
        assert code == 0
        assert int_rows(out) == [
            [1],
            [1, 1],
            [1, 2, 2],
            [1, 3, 5, 5],
            [1, 4, 9, 14, 14],
            [1, 5, 14, 28, 42, 42],
        ]

    def test_tetrahedron_section(self):
        code, out = run_script(table, ["--p", "3", "--n", "5"])
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n = 5"
        assert int_rows("\n".join(lines[1:])) == [
            [1, 4, 9, 14, 14],
            [4, 15, 30, 35],
            [9, 30, 45],
            [14, 35],
            [14],
        ]

    def test_closed_source_matches(self):
        _, recurrence = run_script(table, ["--p", "4", "--n-max", "5"])
        _, closed = run_script(
            table, ["--p", "4", "--n-max", "5", "--source", "closed"]
        )
        assert recurrence == closed

    def test_prime_section(self):
        code, out = run_script(
            table,
            ["--p", "3", "--n", "3", "--source", "prime", "--k-max", "4", "--l-max", "4"],
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n = 3"
        assert int_rows("\n".join(lines[1:])) == [
            [1, 2, 2, 0, -5],
            [2, 3, 0, -10, -30],
            [2, 0, -12, -40, -90],
            [0, -10, -40, -100, -200],
            [-5, -30, -90, -200, -375],
        ]

    def test_csv_round_trip(self):
        code, out = run_script(
            table, ["--p", "3", "--n-max", "4", "--format", "csv"]
        )
        assert code == 0
        frame = csv_to_frame(out)
        assert list(frame.columns) == ["p", "n", "k1", "k2", "value"]
        assert len(frame) == 1 + 4 + 9 + 16
        for _, row in frame.iterrows():
            assert row["value"] == b3_closed(row["n"], row["k1"], row["k2"])

    def test_csv_exact_digits(self):
        code, out = run_script(
            table, ["--p", "2", "--n", "40", "--format", "csv"]
        )
        assert code == 0
        frame = csv_to_frame(out)
        assert sum(frame["value"]) == fuss_catalan(2, 40)

    def test_json_round_trip(self):
        code, out = run_script(
            table, ["--p", "4", "--n", "5", "--format", "json"]
        )
        assert code == 0
        data = json.loads(out)
        assert (data["p"], data["source"]) == (4, "recurrence")
        values = data["layers"][0]["values"]
        for k1 in range(5):
            for k2 in range(5):
                for k3 in range(5):
                    idx = stat_index(4, 5, (k1, k2, k3))
                    assert values[k1][k2][k3] == bp_closed(idx)

    def test_prime_json(self):
        code, out = run_script(
            table, ["--p", "3", "--n", "3", "--source", "prime", "--format", "json"]
        )
        assert code == 0
        assert json.loads(out)["layers"][0]["values"][2][2] == -12

    def test_box_export_guard(self):
        code, out = run_script(table, ["--p", "12", "--n", "5"])
        assert code == 0
        assert out.startswith("n = 5")
        code, _ = run_script(table, ["--p", "12", "--n", "5", "--format", "csv"])
        assert code == 2

    def test_usage_errors(self):
        for argv in (
            ["--p", "1"],
            ["--p", "two"],
            ["--format", "xml"],
            ["--source", "prime", "--p", "4"],
            ["--bogus"],
        ):
            code, _ = run_script(table, argv)
            assert code == 2, argv


class TestSeq(unittest.TestCase):
    def test_examples(self):
        assert run_script(seq, ["--p", "3", "--count", "5"]) == (
            0,
            "1\n3\n12\n55\n273\n",
        )
        assert int_rows(run_script(seq, ["--p", "2", "--count", "6"])[1]) == [
            [1],
            [2],
            [5],
            [14],
            [42],
            [132],
        ]
        assert run_script(seq, ["--p", "4", "--count", "2"])[1] == "1\n4\n"

    def test_csv_big_values(self):
        code, out = run_script(
            seq, ["--p", "3", "--count", "40", "--format", "csv"]
        )
        assert code == 0
        frame = csv_to_frame(out)
        assert list(frame["value"]) == [fuss_catalan(3, n) for n in range(1, 41)]


class TestEnumerate(unittest.TestCase):
    def test_stats(self):
        code, out = run_script(
            enumerate_script, ["--p", "3", "--n", "2", "--stats"]
        )
        assert code == 0
        assert out.splitlines() == [
            "UUUUDD  2  0 0",
            "UUUDUD  1  0 1",
            "UUDUUD  1  1 0",
        ]

    def test_single_dyck_path(self):
        assert run_script(enumerate_script, ["--p", "2", "--n", "1"]) == (0, "UD\n")

    def test_count(self):
        code, out = run_script(enumerate_script, ["--p", "3", "--n", "8"])
        assert code == 0
        assert len(out.splitlines()) == 43263

    def test_trees(self):
        code, out = run_script(
            enumerate_script, ["--p", "3", "--n", "1", "--trees"]
        )
        assert out == "UUD  (•••)\n"

    def test_distribution(self):
        code, out = run_script(
            enumerate_script,
            ["--p", "3", "--n", "4", "--distribution", "--format", "csv"],
        )
        assert code == 0
        frame = csv_to_frame(out)
        for _, row in frame.iterrows():
            assert row["count"] == b3_closed(4, row["k1"], row["k2"])
        assert sum(frame["count"]) == 55

    def test_json(self):
        code, out = run_script(
            enumerate_script,
            ["--p", "3", "--n", "2", "--stats", "--format", "json"],
        )
        paths = json.loads(out)["paths"]
        assert paths[2] == {"path": "UUDUUD", "last_run": 1, "ks": [1, 0]}

    def test_limit(self):
        code, _ = run_script(
            enumerate_script, ["--p", "3", "--n", "8", "--limit", "100"]
        )
        assert code == 2
        with mock.patch.dict(os.environ, {"FUSS_MAX_ENUM": "10"}):
            code, _ = run_script(enumerate_script, ["--p", "3", "--n", "3"])
        assert code == 2


class TestVerify(unittest.TestCase):
    def test_sums(self):
        code, out = run_script(
            verify, ["--suite", "sums", "--p", "3", "--n-max", "12"]
        )
        assert code == 0
        report = json.loads(out)
        assert report["pass"]
        assert [s["suite"] for s in report["suites"]] == ["sums"]
        for check in report["suites"][0]["checks"]:
            assert set(check) == {"name", "bound", "pass", "counterexample"}

    def test_all_quick(self):
        code, out = run_script(verify, ["--suite", "all", "--quick"])
        assert code == 0
        report = json.loads(out)
        names = [s["suite"] for s in report["suites"]]
        assert names == sorted(names) and len(names) == 7

    def test_fault_injection(self):
        with mock.patch(
            "fusscat.verify.suites.build_simplex", corrupted_build_simplex
        ):
            code, out = run_script(
                verify, ["--suite", "closed-vs-recurrence", "--quick"]
            )
        assert code == 1
        failed = failed_by_check(out)
        assert failed["closed-vs-recurrence", "bp-closed-vs-simplex-p3"] == [3, 0, 1]

    def run_all_corrupted(self, target, replacement):
        with mock.patch(target, replacement):
            code, out = run_script(verify, ["--suite", "all", "--quick"])
        assert code == 1
        report = json.loads(out)
        assert not report["pass"]
        assert len(report["suites"]) == 7
        return failed_by_check(out)

    def test_all_suites_catch_simplex_cell(self):
        failed = self.run_all_corrupted(
            "fusscat.verify.suites.build_simplex", corrupted_build_simplex
        )
        assert failed["closed-vs-recurrence", "ballot-vs-triangle"] == [3, 1]
        assert failed["closed-vs-recurrence", "bp-closed-vs-simplex-p3"] == [3, 0, 1]
        assert failed["sums", "layer-sums-p3"] == [3]
        assert failed["enumeration", "distribution-p3"] == [3, 0, 1]

    def test_all_suites_catch_prime_cell(self):
        failed = self.run_all_corrupted(
            "fusscat.verify.suites.build_prime_grid", corrupted_build_prime_grid
        )
        assert failed["prime", "grid-vs-closed"] == [2, 1, 3]
        assert ("prime", "closed-recurrence") not in failed

    def test_all_suites_catch_series_coefficient(self):
        failed = self.run_all_corrupted(
            "fusscat.verify.suites.solve_G", corrupted_solve_G
        )
        assert failed["gf", "G-collapsed-sums"] == [3, 2, 1]
        assert ("gf", "G-cubic") in failed
        assert {suite for suite, _ in failed} == {"gf"}

    def test_config_and_logdir(self):
        with tempfile.TemporaryDirectory() as logdir:
            config = os.path.join(logdir, "bounds.json")
            with open(config, "w") as f:
                json.dump({"prime": {"box": 4}}, f)
            code, out = run_script(
                verify,
                ["--suite", "prime", "--config", config, "--logdir", logdir],
            )
            assert code == 0
            bound = json.loads(out)["suites"][0]["checks"][0]["bound"]
            assert bound == {"box": 4}
            for name in ("verify_log.txt", "args.json", "report.json"):
                assert os.path.exists(os.path.join(logdir, name))

    def test_bad_config(self):
        with tempfile.TemporaryDirectory() as logdir:
            config = os.path.join(logdir, "bounds.json")
            with open(config, "w") as f:
                json.dump({"prime": {"size": 4}}, f)
            code, _ = run_script(
                verify, ["--suite", "prime", "--config", config]
            )
            assert code == 2

    def test_usage_errors(self):
        assert run_script(verify, ["--suite", "nope"])[0] == 2
        assert run_script(verify, ["--p", "1"])[0] == 2
        assert run_script(verify, ["--nb-worker", "0"])[0] == 2


class TestGF(unittest.TestCase):
    def test_all(self):
        code, out = run_script(gf, ["--order", "8", "--check", "all"])
        assert code == 0
        checks = json.loads(out)["suites"][0]["checks"]
        names = {c["name"] for c in checks}
        assert {"F-coefficients", "G-cubic", "prime-rational"} <= names
        assert all(c["pass"] for c in checks)

    def test_order_one(self):
        code, out = run_script(gf, ["--order", "1", "--check", "F"])
        assert code == 0
        names = [c["name"] for c in json.loads(out)["suites"][0]["checks"]]
        assert names == ["F-coefficients", "F-functional"]

    def test_show(self):
        code, out = run_script(gf, ["--order", "2", "--show", "F"])
        assert code == 0
        assert out.strip().startswith("1 + t")

    def test_bad_order(self):
        assert run_script(gf, ["--order", "0"])[0] == 2
        assert run_script(gf, ["--check", "H"])[0] == 2


class TestApp(unittest.TestCase):
    def test_dispatch(self):
        result = subprocess.run(
            [sys.executable, "-m", "fusscat.app", "seq", "--p", "3", "--count", "3"],
            stdout=subprocess.PIPE,
            universal_newlines=True,
        )
        assert result.returncode == 0
        assert result.stdout.split() == ["1", "3", "12"]

    def test_unknown_command(self):
        result = subprocess.run(
            [sys.executable, "-m", "fusscat.app", "plot"],
            stderr=subprocess.PIPE,
            universal_newlines=True,
        )
        assert result.returncode == 2


if __name__ == "__main__":
    unittest.main(verbosity=1)
