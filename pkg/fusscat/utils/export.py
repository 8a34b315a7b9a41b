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
Renderers shared by the scripts. CSV goes through pandas with object
columns so integers keep every digit.
"""
import json
from io import StringIO
from itertools import product

import pandas as pd

from fusscat.globals import SIMPLEX_CELL_LIMIT
from fusscat.utils.util import check_resource, exact_int_list

FORMATS = ("plain", "csv", "json")


def stat_columns(p):
    return ["k{}".format(i) for i in range(1, p)]


def _frame(rows, columns):
    frame = pd.DataFrame(rows, columns=columns)
    frame[columns[-1]] = frame[columns[-1]].astype(object)
    return frame


def frame_to_csv(frame):
    return frame.to_csv(index=False)


def csv_to_frame(text):
    """
    Parse CSV written by frame_to_csv, keeping integers exact.
    """
    frame = pd.read_csv(StringIO(text), dtype=str)
    return frame.apply(lambda column: column.map(int)).astype(object)


# SIMPLEX LAYERS
def simplex_frame(simplex, ns):
    """
    Long table p, n, k1..k_{p-1}, value over the box [0, n-1]^(p-1) of each
    requested layer, zeros included.
    """
    p = simplex.p
    check_resource(
        "box cells", sum(n ** (p - 1) for n in ns), SIMPLEX_CELL_LIMIT
    )
    rows = []
    for n in ns:
        layer = simplex.layer(n)
        for ks in product(range(n), repeat=p - 1):
            rows.append([p, n] + list(ks) + [layer[ks]])
    return _frame(rows, ["p", "n"] + stat_columns(p) + ["value"])


def simplex_json(simplex, ns, source):
    return {
        "p": simplex.p,
        "source": source,
        "layers": [
            {"n": n, "values": exact_int_list(simplex.layer_array(n))}
            for n in ns
        ],
    }


def _aligned(rows):
    """
    Right-align the cells of ragged rows on a common width.
    """
    width = max((len(str(v)) for row in rows for v in row), default=1)
    return "\n".join(
        " ".join(str(v).rjust(width) for v in row).rstrip() for row in rows
    )


def simplex_plain(simplex, ns):
    """
    Zero entries omitted: the triangle as one row per n for p = 2, a
    triangular matrix per layer for p = 3, and "k1 .. k_{p-1} value" lines
    for larger arities.
    """
    p = simplex.p
    if p == 2:
        return _aligned([list(simplex.layer(n).values) for n in ns])
    blocks = []
    for n in ns:
        layer = simplex.layer(n)
        if p == 3:
            rows = [
                [layer[(k, l)] for l in range(n - k)] for k in range(n)
            ]
            body = _aligned(rows)
        else:
            body = _aligned(
                [list(ks) + [value] for ks, value in layer.items() if value]
            )
        blocks.append("n = {}\n{}".format(n, body))
    return "\n\n".join(blocks)


# PRIME GRID
def prime_frame(grid, ns):
    rows = [
        [n, k, l, grid[n, k, l]]
        for n in ns
        for k in range(grid.k_max + 1)
        for l in range(grid.l_max + 1)
    ]
    return _frame(rows, ["n", "k", "l", "value"])


def prime_json(grid, ns):
    return {
        "p": 3,
        "source": "prime",
        "layers": [
            {"n": n, "values": exact_int_list(grid.section(n))} for n in ns
        ],
    }


def prime_plain(grid, ns):
    """
    Full sections, zeros and negative values included.
    """
    blocks = []
    for n in ns:
        blocks.append(
            "n = {}\n{}".format(n, _aligned(grid.section(n).tolist()))
        )
    return "\n\n".join(blocks)


# PATHS
def distribution_frame(p, counts):
    rows = [list(ks) + [count] for ks, count in counts.items()]
    return _frame(rows, stat_columns(p) + ["count"])


def to_json(data):
    return json.dumps(data, indent=2)
