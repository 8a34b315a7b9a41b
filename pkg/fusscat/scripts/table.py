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
Table

Print layers of the Catalan triangle (p=2), of the Fuss-Catalan
tetrahedron (p=3) or of the p-simplex, or sections of the extended grid
B'_3 with its negative values. Zero entries are left out of plain output.

Usage:
    table [options]
    table (-h | --help)

Options:
    --p <int>           Arity [default: 2]
    --n <int>           Print only layer n [default: None]
    --n-max <int>       Print layers 1..n-max [default: 6]
    --source <str>      recurrence, closed or prime [default: recurrence]
    --k-max <int>       Rows of the prime sections [default: None]
    --l-max <int>       Columns of the prime sections [default: None]
    --format <str>      plain, csv or json [default: plain]
"""
import sys

from fusscat.exact.core import bp_closed, stat_index
from fusscat.simplex.prime_grid import build_prime_grid
from fusscat.simplex.simplex import (
    FCSimplex,
    SimplexLayer,
    build_simplex,
    simplex_keys,
)
from fusscat.utils.export import (
    FORMATS,
    frame_to_csv,
    prime_frame,
    prime_json,
    prime_plain,
    simplex_frame,
    simplex_json,
    simplex_plain,
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

SOURCES = ("recurrence", "closed", "prime")


def parse_args(argv=None):
    args = docopt_args(__doc__, argv)
    try:
        args.p = parse_int(args.p, "p", minimum=2)
        args.n = parse_optional_int(args.n, "n", minimum=1)
        args.n_max = parse_int(args.n_max, "n-max", minimum=1)
        args.source = parse_choice(args.source, "source", SOURCES)
        args.k_max = parse_optional_int(args.k_max, "k-max", minimum=0)
        args.l_max = parse_optional_int(args.l_max, "l-max", minimum=0)
        args.format = parse_choice(args.format, "format", FORMATS)
        if args.source == "prime" and args.p != 3:
            raise ValueError("--source prime needs --p 3")
    except ValueError as exc:
        usage_error(str(exc))
    return args


def closed_simplex(p, n_max):
    """
    Same layout as build_simplex, every entry from the product formula.
    """
    layers = [
        SimplexLayer(
            p,
            n,
            [bp_closed(stat_index(p, n, ks)) for ks in simplex_keys(p, n)],
        )
        for n in range(1, n_max + 1)
    ]
    return FCSimplex(p, layers)


def render(args):
    """
    :param args: Dict[str, Any] parsed options
    :return: str
    """
    args = DotDict(args)
    ns = [args.n] if args.n is not None else list(range(1, args.n_max + 1))
    n_top = max(ns)

    if args.source == "prime":
        k_max = args.k_max if args.k_max is not None else n_top
        l_max = args.l_max if args.l_max is not None else n_top
        grid = build_prime_grid(n_top, k_max, l_max)
        if args.format == "csv":
            return frame_to_csv(prime_frame(grid, ns))
        if args.format == "json":
            return to_json(prime_json(grid, ns))
        return prime_plain(grid, ns)

    if args.source == "closed":
        simplex = closed_simplex(args.p, n_top)
    else:
        simplex = build_simplex(args.p, n_top)
    if args.format == "csv":
        return frame_to_csv(simplex_frame(simplex, ns))
    if args.format == "json":
        return to_json(simplex_json(simplex, ns, args.source))
    return simplex_plain(simplex, ns)


def main(args):
    """
    Print the requested table.

    :param args: Dict[str, Any]
    :return: int exit code
    """
    try:
        text = render(args)
    except ValueError as exc:
        usage_error(str(exc))
    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main(parse_args()))
