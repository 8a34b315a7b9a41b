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
The redundant extension B'_3 of the tetrahedron to every k, l >= 0.
"""
import numpy as np

from fusscat.exact.core import b3_prime_correction


class PrimeGrid:
    """
    Dense box of B'_3(n, k, l) for 0 <= n <= n_max, 0 <= k <= k_max,
    0 <= l <= l_max. Values may be negative. Reads outside the box with a
    negative coordinate return 0.
    """

    def __init__(self, values):
        values = np.asarray(values, dtype=object)
        assert values.ndim == 3
        self.n_max, self.k_max, self.l_max = (d - 1 for d in values.shape)
        values.flags.writeable = False
        self.values = values

    def __getitem__(self, nkl):
        n, k, l = nkl
        if n < 0 or k < 0 or l < 0:
            return 0
        if n > self.n_max or k > self.k_max or l > self.l_max:
            raise IndexError(
                "({}, {}, {}) is outside the grid bounds ({}, {}, {})".format(
                    n, k, l, self.n_max, self.k_max, self.l_max
                )
            )
        return self.values[n, k, l]

    def section(self, n):
        """
        :return: np.ndarray (k_max + 1, l_max + 1) of B'_3(n, ., .)
        """
        return self.values[n]

    def cells(self):
        for n, k, l in np.ndindex(self.values.shape):
            yield (n, k, l), self.values[n, k, l]


def build_prime_grid(n_max, k_max, l_max):
    """
    Fill the grid with the corrected recurrence
    B'(n,k,l) = B'(n-1,k,l) + B'(n,k-1,l) + B'(n,k,l-1) - B'(n,k-1,l-1)
    + c(n,k,l), every term with a negative coordinate being 0.

    :return: PrimeGrid
    """
    if min(n_max, k_max, l_max) < 0:
        raise ValueError(
            "Grid bounds must be >= 0, got ({}, {}, {})".format(
                n_max, k_max, l_max
            )
        )
    values = np.zeros((n_max + 1, k_max + 1, l_max + 1), dtype=object)

    def at(n, k, l):
        if n < 0 or k < 0 or l < 0:
            return 0
        return values[n, k, l]

    for n in range(n_max + 1):
        for k in range(k_max + 1):
            for l in range(l_max + 1):
                values[n, k, l] = (
                    at(n - 1, k, l)
                    + at(n, k - 1, l)
                    + at(n, k, l - 1)
                    - at(n, k - 1, l - 1)
                    + b3_prime_correction(n, k, l)
                )
    return PrimeGrid(values)
