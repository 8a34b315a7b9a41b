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
Power series in t, x, y with integer coefficients, truncated separately
in each variable. Coefficients live in a dense numpy object array so that
they stay Python ints.
"""
from itertools import product

import numpy as np
import pandas as pd


class TruncatedSeries:
    def __init__(self, caps, coeffs=None):
        """
        :param caps: Tuple[int, int, int] largest kept exponent of t, x, y
        :param coeffs: Optional array-like of shape caps + 1
        """
        caps = tuple(int(c) for c in caps)
        if len(caps) != 3 or min(caps) < 0:
            raise ValueError("Caps must be three integers >= 0, got {}".format(caps))
        shape = tuple(c + 1 for c in caps)
        if coeffs is None:
            coeffs = np.zeros(shape, dtype=object)
        else:
            coeffs = np.array(coeffs, dtype=object)
            if coeffs.shape != shape:
                raise ValueError(
                    "Coefficient array of shape {} does not match caps {}".format(
                        coeffs.shape, caps
                    )
                )
        self.caps = caps
        self._coeffs = coeffs

    # CONSTRUCTORS
    @classmethod
    def zero(cls, caps):
        return cls(caps)

    @classmethod
    def one(cls, caps):
        return cls.monomial(caps, 0, 0, 0)

    @classmethod
    def monomial(cls, caps, i, j, k, coefficient=1):
        series = cls(caps)
        if i <= series.caps[0] and j <= series.caps[1] and k <= series.caps[2]:
            series._coeffs[i, j, k] = coefficient
        return series

    @classmethod
    def gens(cls, caps):
        """
        :return: (t, x, y)
        """
        return (
            cls.monomial(caps, 1, 0, 0),
            cls.monomial(caps, 0, 1, 0),
            cls.monomial(caps, 0, 0, 1),
        )

    @classmethod
    def from_dict(cls, caps, terms):
        """
        :param terms: Dict[Tuple[int, int, int], int], terms beyond the caps
            are dropped
        """
        series = cls(caps)
        for (i, j, k), coefficient in terms.items():
            if i <= series.caps[0] and j <= series.caps[1] and k <= series.caps[2]:
                series._coeffs[i, j, k] += coefficient
        return series

    # ACCESS
    @property
    def coeffs(self):
        return self._coeffs.copy()

    def coefficient(self, i, j, k):
        if not (
            0 <= i <= self.caps[0]
            and 0 <= j <= self.caps[1]
            and 0 <= k <= self.caps[2]
        ):
            raise ValueError(
                "Monomial t^{} x^{} y^{} is outside the caps {}".format(
                    i, j, k, self.caps
                )
            )
        return self._coeffs[i, j, k]

    def nonzero_terms(self):
        """
        :return: List[Tuple[Tuple[int, int, int], int]] sorted by exponents
        """
        return [
            ((i, j, k), self._coeffs[i, j, k])
            for i, j, k in product(*(range(c + 1) for c in self.caps))
            if self._coeffs[i, j, k] != 0
        ]

    def is_zero(self):
        return not self.nonzero_terms()

    # RING OPERATIONS
    def _check_caps(self, other):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("Expected a TruncatedSeries, got {}".format(type(other)))
        if other.caps != self.caps:
            raise ValueError(
                "Cannot combine series with caps {} and {}".format(
                    self.caps, other.caps
                )
            )

    def _coerce(self, other):
        if isinstance(other, int):
            return TruncatedSeries.monomial(self.caps, 0, 0, 0, other)
        self._check_caps(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return TruncatedSeries(self.caps, self._coeffs + other._coeffs)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.caps, -self._coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(self.caps, self._coeffs * other)
        self._check_caps(other)
        dt, dx, dy = self.caps
        out = np.zeros(self._coeffs.shape, dtype=object)
        for i, j, k in np.argwhere(self._coeffs != 0):
            out[i:, j:, k:] += (
                self._coeffs[i, j, k]
                * other._coeffs[: dt + 1 - i, : dx + 1 - j, : dy + 1 - k]
            )
        return TruncatedSeries(self.caps, out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        result = TruncatedSeries.one(self.caps)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries.monomial(self.caps, 0, 0, 0, other)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.caps == other.caps and bool(
            (self._coeffs == other._coeffs).all()
        )

    __hash__ = None

    def swap_xy(self):
        """
        Exchange x and y. Needs equal caps on x and y.
        """
        if self.caps[1] != self.caps[2]:
            raise ValueError(
                "swap_xy needs equal x and y caps, got {}".format(self.caps)
            )
        return TruncatedSeries(self.caps, self._coeffs.transpose(0, 2, 1))

    def reciprocal(self):
        """
        Inverse of a series with constant term +1 or -1, solved one monomial
        at a time in order of total degree.
        """
        c0 = self._coeffs[0, 0, 0]
        if c0 not in (1, -1):
            raise ValueError(
                "Only series with constant term 1 or -1 are invertible over "
                "the integers, got {}".format(c0)
            )
        out = np.zeros(self._coeffs.shape, dtype=object)
        monomials = sorted(
            product(*(range(c + 1) for c in self.caps)), key=lambda m: (sum(m), m)
        )
        for i, j, k in monomials:
            if (i, j, k) == (0, 0, 0):
                out[0, 0, 0] = c0
                continue
            # out[i, j, k] is still 0, so its own term drops out of the sum.
            acc = (
                self._coeffs[i::-1, j::-1, k::-1] * out[: i + 1, : j + 1, : k + 1]
            ).sum()
            out[i, j, k] = -c0 * acc
        return TruncatedSeries(self.caps, out)

    # RENDERING
    def pretty(self):
        """
        Sorted monomials with exact coefficients, e.g. "1 + t*x + 2*t^2*x^2".
        """
        terms = self.nonzero_terms()
        if not terms:
            return "0"
        parts = []
        for (i, j, k), c in sorted(terms, key=lambda term: (sum(term[0]), term[0])):
            factors = [
                name if e == 1 else "{}^{}".format(name, e)
                for name, e in zip("txy", (i, j, k))
                if e
            ]
            monomial = "*".join(factors)
            magnitude = abs(c)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = "{}*{}".format(magnitude, monomial)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += " {} {}".format(sign, body)
        return text

    def __repr__(self):
        return "TruncatedSeries(caps={}, {})".format(self.caps, self.pretty())


def add(a, b):
    return a + b


def mul(a, b):
    return a * b


def negate(a):
    return -a


def swap_xy(a):
    return a.swap_xy()


def reciprocal(a):
    return a.reciprocal()


def coefficient(a, i, j, k):
    return a.coefficient(i, j, k)


def series_to_frame(series, include_zeros=False):
    """
    Coefficient table with columns t, x, y, coefficient.

    :return: pandas.DataFrame
    """
    if include_zeros:
        rows = [
            (i, j, k, series.coefficient(i, j, k))
            for i, j, k in product(*(range(c + 1) for c in series.caps))
        ]
    else:
        rows = [(i, j, k, c) for (i, j, k), c in series.nonzero_terms()]
    frame = pd.DataFrame(rows, columns=["t", "x", "y", "coefficient"])
    frame["coefficient"] = frame["coefficient"].astype(object)
    return frame
