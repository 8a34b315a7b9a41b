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
The Catalan triangle (p=2), the Fuss-Catalan tetrahedron (p=3) and the
general p-simplex, built layer by layer from the defining box sums.
"""
from functools import lru_cache
from itertools import combinations, product

import numpy as np

from fusscat.exact.core import check_arity, binomial
from fusscat.globals import SIMPLEX_CELL_LIMIT
from fusscat.utils.util import check_resource

METHODS = ("recurrence", "box_sum")


@lru_cache(maxsize=64)
def simplex_keys(p, n):
    """
    Indices (k_1..k_{p-1}) with sum < n, in lexicographic order.

    :return: Tuple[Tuple[int, ...], ...]
    """
    return tuple(_bounded_tuples(p - 1, n))


def _bounded_tuples(length, bound):
    """
    Tuples of length nonnegative ints with sum < bound, lexicographic.
    """
    if length == 0:
        if bound > 0:
            yield ()
        return
    for k in range(bound):
        for rest in _bounded_tuples(length - 1, bound - k):
            yield (k,) + rest


def layer_size(p, n):
    return binomial(n - 1 + p - 1, p - 1)


def _signed_offsets(ks):
    """
    Non-empty subsets S of the positive coordinates of ks as (sign, axes)
    pairs, with sign = (-1)^(|S|+1).
    """
    positive = [a for a, k in enumerate(ks) if k]
    for size in range(1, len(positive) + 1):
        sign = 1 if size % 2 else -1
        for axes in combinations(positive, size):
            yield sign, axes


class SimplexLayer:
    """
    Values B_p(n, .) for a fixed n, stored densely in lexicographic order
    of the support. Indices outside the support read as 0.
    """

    def __init__(self, p, n, values):
        self.p = p
        self.n = n
        self.keys = simplex_keys(p, n)
        self._offset = {ks: i for i, ks in enumerate(self.keys)}
        values = list(values)
        assert len(values) == len(self.keys)
        self._values = np.empty(len(values), dtype=object)
        self._values[:] = values
        self._values.flags.writeable = False

    @property
    def values(self):
        return self._values

    def __getitem__(self, ks):
        i = self._offset.get(tuple(ks))
        if i is None:
            return 0
        return self._values[i]

    def __len__(self):
        return len(self.keys)

    def items(self):
        return zip(self.keys, self._values)

    def total(self):
        return sum(self._values)

    def to_array(self):
        """
        Dense (p-1)-dimensional box [0, n-1]^(p-1), zeros outside the support.
        """
        check_resource(
            "box cells", self.n ** (self.p - 1), SIMPLEX_CELL_LIMIT
        )
        box = np.zeros((self.n,) * (self.p - 1), dtype=object)
        for ks, value in self.items():
            box[ks] = value
        return box


class FCSimplex:
    def __init__(self, p, layers):
        self.p = p
        self.layers = tuple(layers)
        self.n_max = len(self.layers)
        for n, layer in enumerate(self.layers, start=1):
            assert layer.n == n and layer.p == p

    def layer(self, n):
        if not 1 <= n <= self.n_max:
            raise ValueError(
                "Layer n={} outside the built range 1..{}".format(n, self.n_max)
            )
        return self.layers[n - 1]

    def entry(self, idx):
        if idx.p != self.p:
            raise ValueError(
                "Index has arity {}, simplex has arity {}".format(idx.p, self.p)
            )
        if len(idx.ks) != self.p - 1:
            raise ValueError(
                "Arity {} needs {} statistics, got {}".format(
                    self.p, self.p - 1, len(idx.ks)
                )
            )
        return self.layer(idx.n)[idx.ks]

    def layer_sum(self, n):
        return self.layer(n).total()

    def layer_array(self, n):
        return self.layer(n).to_array()

    def sections(self):
        for layer in self.layers:
            yield layer.n, layer

    def __eq__(self, other):
        if not isinstance(other, FCSimplex):
            return NotImplemented
        return (
            self.p == other.p
            and self.n_max == other.n_max
            and all(
                list(a.values) == list(b.values)
                for a, b in zip(self.layers, other.layers)
            )
        )

    __hash__ = None


def _next_layer_recurrence(p, previous, n):
    """
    B(n, k) = B(n-1, k) + sum_S (-1)^(|S|+1) B(n, k - e_S), S over the
    non-empty subsets of the positive coordinates of k.
    """
    current = {}
    for ks in simplex_keys(p, n):
        value = previous[ks]
        for sign, axes in _signed_offsets(ks):
            shifted = list(ks)
            for a in axes:
                shifted[a] -= 1
            value += sign * current[tuple(shifted)]
        current[ks] = value
    return SimplexLayer(p, n, (current[ks] for ks in simplex_keys(p, n)))


def _next_layer_box_sum(p, previous, n):
    values = []
    for ks in simplex_keys(p, n):
        values.append(
            sum(previous[i] for i in product(*(range(k + 1) for k in ks)))
        )
    return SimplexLayer(p, n, values)


def build_simplex(p, n_max, method="recurrence"):
    """
    Build layers 1..n_max of the p-simplex.

    :param p: int arity >= 2
    :param n_max: int >= 1
    :param method: "recurrence" (inclusion-exclusion on the current layer)
        or "box_sum" (literal sum over the box of the previous layer)
    :return: FCSimplex
    """
    check_arity(p)
    if n_max < 1:
        raise ValueError("n_max must be >= 1, got {}".format(n_max))
    if method not in METHODS:
        raise ValueError(
            'Unknown method "{}", expected one of {}'.format(method, METHODS)
        )
    check_resource(
        "simplex cells", binomial(n_max + p - 1, p), SIMPLEX_CELL_LIMIT
    )
    step = _next_layer_recurrence if method == "recurrence" else _next_layer_box_sum

    layers = [SimplexLayer(p, 1, [1])]
    for n in range(2, n_max + 1):
        layers.append(step(p, layers[-1], n))
    return FCSimplex(p, layers)


def entry(s, idx):
    return s.entry(idx)


def layer_sum(s, n):
    return s.layer_sum(n)

