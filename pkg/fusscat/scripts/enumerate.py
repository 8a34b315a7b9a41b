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
Enumerate

List every lattice path with n down steps, in lexicographic order with
U before D, optionally with its statistics and its p-ary tree.

Usage:
    enumerate [options]
    enumerate (-h | --help)

Options:
    --p <int>           Arity [default: 3]
    --n <int>           Number of down steps [default: 2]
    --stats             Also print the last run length and k1..k_{p-1}
    --trees             Also print the tree of each path
    --distribution      Print the number of paths per statistic vector
    --limit <int>       Largest number of paths to build, overrides the
                        FUSS_MAX_ENUM environment variable [default: None]
    --format <str>      plain, csv or json [default: plain]
"""
import sys

import pandas as pd

from fusscat.lattice.path import distribution, enumerate_paths, path_stats
from fusscat.lattice.tree import path_to_tree
from fusscat.utils.export import (
    FORMATS,
    distribution_frame,
    frame_to_csv,
    stat_columns,
    to_json,
)
from fusscat.utils.script_helpers import (
    docopt_args,
    parse_choice,
    parse_int,
    parse_optional_int,
    usage_error,
)
from fusscat.utils.util import DotDict


def parse_args(argv=None):
    args = docopt_args(__doc__, argv)
    try:
        args.p = parse_int(args.p, "p", minimum=2)
        args.n = parse_int(args.n, "n", minimum=0)
        args.limit = parse_optional_int(args.limit, "limit", minimum=0)
        args.format = parse_choice(args.format, "format", FORMATS)
    except ValueError as exc:
        usage_error(str(exc))
    args.stats = bool(args.stats)
    args.trees = bool(args.trees)
    args.distribution = bool(args.distribution)
    return args


def path_records(args):
    """
    :return: List[Dict[str, Any]] one record per path
    """
    records = []
    for path in enumerate_paths(args.p, args.n, args.limit):
        record = {"path": path.steps}
        if args.trees:
            record["tree"] = str(path_to_tree(path))
        if args.stats:
            stats = path_stats(path)
            record["last_run"] = stats.last_run
            record["ks"] = list(stats.ks)
        records.append(record)
    return records


def render_distribution(args):
    counts = distribution(args.p, args.n, args.limit)
    if args.format == "csv":
        return frame_to_csv(distribution_frame(args.p, counts))
    if args.format == "json":
        return to_json(
            {
                "p": args.p,
                "n": args.n,
                "distribution": [
                    {"ks": list(ks), "count": count}
                    for ks, count in counts.items()
                ],
            }
        )
    return "\n".join(
        "{}  {}".format(" ".join(str(k) for k in ks), count)
        for ks, count in counts.items()
    )


def render_paths(args):
    records = path_records(args)
    if args.format == "json":
        return to_json({"p": args.p, "n": args.n, "paths": records})
    if args.format == "csv":
        columns = ["path"]
        if args.trees:
            columns.append("tree")
        if args.stats:
            columns += ["last_run"] + stat_columns(args.p)
        rows = []
        for record in records:
            row = [record["path"]]
            if args.trees:
                row.append(record["tree"])
            if args.stats:
                row += [record["last_run"]] + record["ks"]
            rows.append(row)
        return frame_to_csv(pd.DataFrame(rows, columns=columns))
    lines = []
    for record in records:
        fields = [record["path"]]
        if args.trees:
            fields.append(record["tree"])
        if args.stats:
            fields.append(str(record["last_run"]))
            fields.append(" ".join(str(k) for k in record["ks"]))
        lines.append("  ".join(fields))
    return "\n".join(lines)


def main(args):
    """
    :param args: Dict[str, Any]
    :return: int exit code
    """
    args = DotDict(args)
    try:
        if args.distribution:
            text = render_distribution(args)
        else:
            text = render_paths(args)
    except ValueError as exc:
        usage_error(str(exc))
    if text:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main(parse_args()))
