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
GF

Check the generating function identities of the tetrahedron on series
truncated at t^order, x^order and y^order. Prints a JSON report, or
with --show the requested series. Exits with 1 when a check fails.

Usage:
    gf [options]
    gf (-h | --help)

Options:
    --order <int>       Truncation order, at least 1 [default: 8]
    --check <str>       F, G-cubic, prime-rational or all [default: all]
    --show <str>        Print a series instead: none, F, G or prime [default: none]
    --format <str>      plain or csv, used by --show [default: plain]
"""
import sys

from fusscat.series.generating import build_F, rational_b3prime
from fusscat.series.truncated import series_to_frame
from fusscat.utils.export import frame_to_csv
from fusscat.utils.logging import setup_logger
from fusscat.utils.script_helpers import (
    docopt_args,
    parse_choice,
    parse_int,
    usage_error,
)
from fusscat.utils.util import DotDict
from fusscat.verify.report import build_report, failed_checks, render_report
from fusscat.verify.suites import GeneratingFunctions

CHECKS = ("F", "G-cubic", "prime-rational", "all")
SHOWABLE = ("none", "F", "G", "prime")


def parse_args(argv=None):
    args = docopt_args(__doc__, argv)
    try:
        args.order = parse_int(args.order, "order", minimum=1)
        args.check = parse_choice(args.check, "check", CHECKS)
        args.show = parse_choice(args.show, "show", SHOWABLE)
        args.format = parse_choice(args.format, "format", ("plain", "csv"))
    except ValueError as exc:
        usage_error(str(exc))
    return args


def shown_series(suite, show):
    if show == "G":
        return suite.G
    if show == "F":
        return build_F(suite.G)
    return rational_b3prime(suite.caps)


def main(args):
    """
    :param args: Dict[str, Any]
    :return: int exit code
    """
    args = DotDict(args)
    logger = setup_logger("gf")
    suite = GeneratingFunctions.from_args({"order": args.order})
    groups = (
        sorted(GeneratingFunctions.CHECK_GROUPS)
        if args.check == "all"
        else [args.check]
    )
    results = suite.run(logger, suite.checks(groups))
    report = build_report({suite.name: results})

    if args.show == "none":
        print(render_report(report))
    else:
        series = shown_series(suite, args.show)
        if args.format == "csv":
            sys.stdout.write(frame_to_csv(series_to_frame(series)))
        else:
            print(series.pretty())

    for _, check_name, counterexample in failed_checks(report):
        logger.error(
            "{} failed at monomial {}".format(check_name, counterexample)
        )
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    sys.exit(main(parse_args()))
