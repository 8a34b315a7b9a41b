# Copyright (C) 2026 The fusscat authors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.
"""
Machine-readable verification report:

    {"version": ..., "pass": bool,
     "suites": [{"suite": name, "pass": bool,
                 "checks": [{"name", "bound", "pass", "counterexample"}]}]}

Suites are sorted by name.
"""
import json

from fusscat.globals import VERSION


def check_to_dict(result):
    return {
        "name": result.name,
        "bound": result.bound,
        "pass": result.passed,
        "counterexample": result.counterexample,
    }


def build_report(results_by_suite):
    """
    :param results_by_suite: Dict[str, List[CheckResult]]
    :return: Dict[str, Any]
    """
    suites = []
    for suite_name in sorted(results_by_suite):
        checks = [check_to_dict(r) for r in results_by_suite[suite_name]]
        suites.append(
            {
                "suite": suite_name,
                "pass": all(c["pass"] for c in checks),
                "checks": checks,
            }
        )
    return {
        "version": VERSION,
        "pass": all(s["pass"] for s in suites),
        "suites": suites,
    }


def render_report(report):
    return json.dumps(report, indent=2)


def failed_checks(report):
    """
    :return: List[Tuple[str, str, Any]] (suite, check, counterexample)
    """
    return [
        (suite["suite"], check["name"], check["counterexample"])
        for suite in report["suites"]
        for check in suite["checks"]
        if not check["pass"]
    ]
