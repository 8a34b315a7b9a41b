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
Verify

Run the verification suites and print a JSON report on stdout. Progress
and failures are logged on stderr. Exits with 0 when every check passes,
1 when one fails and 2 on a usage error.

Usage:
    verify [options]
    verify (-h | --help)

Suite Options:
    --suite <str>       Suite name, or all [default: all]
    --p <int>           Restrict the suites to one arity [default: None]
    --n-max <int>       Largest layer to check [default: None]
    --quick             Use the quick bounds instead of the full ones
    --config <path>     JSON file of bounds keyed by suite name
    --prompt            Prompt to modify the bounds of each suite
    --seed <int>        Seed of the random words [default: 0]

Script Options:
    --nb-worker <int>   Number of processes running suites [default: 1]
    --logdir <path>     Also write the log, args and report here [default: None]

Troubleshooting Options:
    --profile           Profile this script
"""
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from fusscat.registry import REGISTRY as R
from fusscat.utils.logging import log_args, setup_logger, write_args_file
from fusscat.utils.script_helpers import (
    docopt_args,
    parse_int,
    parse_none,
    parse_optional_int,
    parse_path,
    usage_error,
)
from fusscat.utils.util import DotDict, ResourceLimitError
from fusscat.verify.report import build_report, failed_checks, render_report


def parse_args(argv=None):
    args = docopt_args(__doc__, argv)
    try:
        args.p = parse_optional_int(args.p, "p", minimum=2)
        args.n_max = parse_optional_int(args.n_max, "n-max", minimum=1)
        args.seed = parse_int(args.seed, "seed")
        args.nb_worker = parse_int(args.nb_worker, "nb-worker", minimum=1)
        if args.suite != "all":
            R.lookup_suite(args.suite)
    except ValueError as exc:
        usage_error(str(exc))
    if args.config:
        args.config = parse_path(args.config)
    args.logdir = parse_none(args.logdir)
    if args.logdir:
        args.logdir = parse_path(args.logdir)
    args.quick = bool(args.quick)
    args.prompt = bool(args.prompt)
    args.profile = bool(args.profile)
    return args


def load_config(path):
    """
    :return: Dict[str, Dict[str, Any]] bounds keyed by suite name
    """
    if not path:
        return {}
    try:
        with open(path) as config_file:
            config = json.load(config_file)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValueError("Cannot read config {}: {}".format(path, exc))
    if not isinstance(config, dict):
        raise ValueError("Config {} must hold a JSON object".format(path))
    for suite_name in config:
        R.lookup_suite(suite_name)
    return config


def resolve_bounds(args):
    """
    Defaults, then the config file, then --p/--n-max and --seed, then the
    prompt.

    :return: List[(suite class, Dict[str, Any])] sorted by suite name
    """
    args = DotDict(args)
    config = load_config(args.config)
    plan = []
    for suite_cls in R.resolve_suites(args.suite):
        bounds = suite_cls.default_args(full=not args.quick)
        overrides = config.get(suite_cls.name, {})
        unknown = set(overrides) - set(bounds)
        if unknown:
            raise ValueError(
                "{} has no option(s): {}".format(
                    suite_cls.name, ", ".join(sorted(unknown))
                )
            )
        bounds.update(overrides)
        bounds = suite_cls.apply_overrides(bounds, args.p, args.n_max)
        if "seed" in bounds:
            bounds["seed"] = args.seed
        if args.prompt:
            bounds = suite_cls.prompt(bounds)
        plan.append((suite_cls, bounds))
    return plan


def run_suite(suite_cls, bounds, logger=None):
    return suite_cls.name, suite_cls.from_args(bounds).run(logger)


def run_plan(plan, nb_worker, logger):
    """
    :return: Dict[str, List[CheckResult]]
    """
    if nb_worker == 1 or len(plan) == 1:
        return dict(run_suite(cls, bounds, logger) for cls, bounds in plan)

    results = {}
    with ProcessPoolExecutor(max_workers=nb_worker) as pool:
        futures = [
            pool.submit(run_suite, cls, bounds) for cls, bounds in plan
        ]
        for future in futures:
            suite_name, suite_results = future.result()
            for result in suite_results:
                logger.info(
                    "[{}] {} {}".format(
                        suite_name,
                        result.name,
                        "pass" if result.passed else "FAIL",
                    )
                )
            results[suite_name] = suite_results
    return results


def main(args):
    """
    Run the suites and print the report.

    :param args: Dict[str, Any]
    :return: int exit code
    """
    args = DotDict(args)
    logger = setup_logger("verify", args.logdir)
    log_args(logger, args)
    if args.logdir:
        write_args_file(args.logdir, args)

    try:
        plan = resolve_bounds(args)
    except ValueError as exc:
        usage_error(str(exc))
    for suite_cls, bounds in plan:
        logger.info(
            "{} bounds: {}".format(
                suite_cls.name, json.dumps(bounds, sort_keys=True)
            )
        )

    if args.profile:
        try:
            from pyinstrument import Profiler
        except ImportError:
            raise ImportError("You must install pyinstrument to use profiling.")
        profiler = Profiler()
        profiler.start()

    try:
        results = run_plan(plan, args.nb_worker, logger)
    except ResourceLimitError as exc:
        usage_error(str(exc))
    finally:
        if args.profile:
            profiler.stop()
            print(
                profiler.output_text(unicode=True, color=True),
                file=sys.stderr,
            )

    report = build_report(results)
    print(render_report(report))
    if args.logdir:
        report_path = os.path.join(args.logdir, "report.json")
        with open(report_path, "w") as report_file:
            report_file.write(render_report(report))

    for suite_name, check_name, counterexample in failed_checks(report):
        logger.error(
            "{} / {} failed, first counterexample: {}".format(
                suite_name, check_name, json.dumps(counterexample)
            )
        )
    logger.info(
        "verification {}".format("passed" if report["pass"] else "FAILED")
    )
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    sys.exit(main(parse_args()))
