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
import os
import sys

from docopt import DocoptExit, docopt

from fusscat.utils.util import DotDict

USAGE_EXIT_CODE = 2


def parse_none(none_str):
    if none_str is None or none_str == "None":
        return None
    else:
        return none_str


def parse_path(rel_path):
    """
    :param rel_path: (str) relative path
    :return: (str) absolute path
    """
    return os.path.abspath(rel_path)


def parse_int(int_str, name, minimum=None):
    """
    Parse an integer option. Accepts scientific notation ("1e6").

    :param int_str: str
    :param name: str option name, used in the error message
    :param minimum: Optional[int] smallest accepted value
    :return: int
    """
    try:
        value = int(float(int_str))
    except (TypeError, ValueError):
        raise ValueError('--{} expects an integer, got "{}"'.format(name, int_str))
    if minimum is not None and value < minimum:
        raise ValueError("--{} must be >= {}, got {}".format(name, minimum, value))
    return value


def parse_optional_int(int_str, name, minimum=None):
    int_str = parse_none(int_str)
    if int_str is None:
        return None
    return parse_int(int_str, name, minimum)


def parse_choice(value, name, choices):
    if value not in choices:
        raise ValueError(
            '--{} must be one of {}, got "{}"'.format(
                name, ", ".join(choices), value
            )
        )
    return value


def usage_error(message):
    """
    Print a usage error to stderr and exit with the usage exit code.
    """
    print(message, file=sys.stderr)
    sys.exit(USAGE_EXIT_CODE)


def docopt_args(doc, argv=None):
    """
    Run docopt and normalise the option names.

    "--n-max" becomes "n_max". Docopt failures exit with code 2.

    :param doc: str usage text
    :param argv: Optional[List[str]]
    :return: DotDict
    """
    try:
        args = docopt(doc, argv=argv)
    except DocoptExit as exc:
        usage_error(str(exc))
    args = {k.lstrip("-").replace("-", "_"): v for k, v in args.items()}
    args.pop("h", None)
    args.pop("help", None)
    return DotDict(args)
