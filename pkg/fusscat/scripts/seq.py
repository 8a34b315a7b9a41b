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
Seq

Print Fuss-Catalan numbers C_p(n), one per line.

Usage:
    seq [options]
    seq (-h | --help)

Options:
    --p <int>           Arity [default: 2]
    --count <int>       Number of terms [default: 10]
    --start <int>       First index n [default: 1]
    --format <str>      plain, csv or json [default: plain]
"""
import sys

import pandas as pd

from fusscat.exact.core import fuss_catalan
from fusscat.utils.export import FORMATS, frame_to_csv, to_json
from fusscat.utils.script_helpers import (
    docopt_args,
    parse_choice,
    parse_int,
    usage_error,
)
from fusscat.utils.util import DotDict


def parse_args(argv=None):
    args = docopt_args(__doc__, argv)
    try:
        args.p = parse_int(args.p, "p", minimum=2)
        args.count = parse_int(args.count, "count", minimum=0)
        args.start = parse_int(args.start, "start", minimum=0)
        args.format = parse_choice(args.format, "format", FORMATS)
    except ValueError as exc:
        usage_error(str(exc))
    return args


def main(args):
    """
    :param args: Dict[str, Any]
    :return: int exit code
    """
    args = DotDict(args)
    ns = range(args.start, args.start + args.count)
    values = [fuss_catalan(args.p, n) for n in ns]

    if args.format == "csv":
        frame = pd.DataFrame({"n": list(ns), "value": values})
        frame["value"] = frame["value"].astype(object)
        sys.stdout.write(frame_to_csv(frame))
    elif args.format == "json":
        print(to_json({"p": args.p, "start": args.start, "values": values}))
    else:
        for value in values:
            print(value)
    return 0


if __name__ == "__main__":
    sys.exit(main(parse_args()))
