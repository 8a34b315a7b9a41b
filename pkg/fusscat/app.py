#!/usr/bin/env python
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
fusscat: multivariate Fuss-Catalan numbers

Usage:
    fusscat.app <command> [<args>...]
    fusscat.app (-h | --help)
    fusscat.app --version

Commands:
    table               Print the triangle, the tetrahedron or a p-simplex.
    seq                 Print Fuss-Catalan numbers.
    enumerate           List lattice paths, trees and their statistics.
    verify              Run the verification suites.
    gf                  Check the generating function identities.

See 'fusscat.app help <command>' for more information on a specific command.
"""
import os
import sys
from subprocess import call

from docopt import docopt

from fusscat.globals import VERSION
from fusscat.utils.script_helpers import USAGE_EXIT_CODE

COMMANDS = ("table", "seq", "enumerate", "verify", "gf")


def command_line(command, argv):
    return [sys.executable, "-m", "fusscat.scripts." + command] + list(argv)


def parse_args(argv=None):
    args = docopt(
        __doc__,
        argv=argv,
        version="fusscat version " + VERSION,
        options_first=True,
    )

    env = os.environ
    command = args["<command>"]
    argv = args["<args>"]
    if command in COMMANDS:
        sys.exit(call(command_line(command, argv), env=env))
    elif command == "help":
        for name in COMMANDS:
            if name in argv:
                sys.exit(call(command_line(name, ["-h"]), env=env))
        print(__doc__)
        sys.exit(0)
    else:
        print(
            "{} is not a valid command. See 'fusscat.app --help'.".format(
                command
            ),
            file=sys.stderr,
        )
        sys.exit(USAGE_EXIT_CODE)


def main():
    parse_args()


if __name__ == "__main__":
    main()
