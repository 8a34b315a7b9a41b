import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from fusscat.series import (
    TruncatedSeries,
    add,
    coefficient,
    mul,
    negate,
    reciprocal,
    series_to_frame,
    swap_xy,
)

CAPS = (3, 2, 2)

exponents = st.tuples(st.integers(0, 3), st.integers(0, 2), st.integers(0, 2))
small_series = st.dictionaries(
    exponents, st.integers(-4, 4), max_size=6
).map(lambda terms: TruncatedSeries.from_dict(CAPS, terms))


def unit(series):
    return series + (1 - series.coefficient(0, 0, 0))


class TestRing(unittest.TestCase):
    def setUp(self):
        self.t, self.x, self.y = TruncatedSeries.gens(CAPS)

    def test_difference_of_squares(self):
        t, x, y = self.t, self.x, self.y
        assert mul(1 + t, 1 - t) == 1 - t * t
        assert mul(x + y, x - y) == x * x - y * y

    def test_identity(self):
        a = 3 + 2 * self.t * self.x - self.y
        assert mul(a, TruncatedSeries.one(CAPS)) == a
        assert add(a, TruncatedSeries.zero(CAPS)) == a
        assert add(a, negate(a)).is_zero()

    def test_truncation(self):
        t = self.t
        assert (t ** 4).is_zero()
        assert (t ** 3).coefficient(3, 0, 0) == 1

    def test_cap_mismatch(self):
        other = TruncatedSeries.one((2, 2, 2))
        with self.assertRaises(ValueError):
            self.t + other
        with self.assertRaises(ValueError):
            self.t * other

    def test_coefficient_outside_caps(self):
        with self.assertRaises(ValueError):
            coefficient(self.t, 4, 0, 0)
        with self.assertRaises(ValueError):
            self.t.coefficient(0, -1, 0)

    def test_monomials_beyond_caps_are_dropped(self):
        series = TruncatedSeries.from_dict(CAPS, {(0, 0, 0): 1, (5, 0, 0): 9})
        assert series == TruncatedSeries.one(CAPS)

    def test_nonzero_terms(self):
        series = 2 - 3 * self.x * self.y
        assert series.nonzero_terms() == [((0, 0, 0), 2), ((0, 1, 1), -3)]

    @settings(max_examples=50, deadline=None)
    @given(small_series, small_series, small_series)
    def test_axioms(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) - b == a


class TestSwap(unittest.TestCase):
    def test_swap(self):
        t, x, y = TruncatedSeries.gens(CAPS)
        assert swap_xy(x) == y
        series = 1 + t * x * x + 5 * y
        assert swap_xy(swap_xy(series)) == series
        symmetric = x * y + x + y
        assert swap_xy(symmetric) == symmetric

    def test_asymmetric_caps(self):
        with self.assertRaises(ValueError):
            swap_xy(TruncatedSeries.one((2, 2, 3)))


class TestReciprocal(unittest.TestCase):
    def test_geometric(self):
        t, _, _ = TruncatedSeries.gens(CAPS)
        inverse = reciprocal(1 - t)
        for i in range(4):
            assert inverse.coefficient(i, 0, 0) == 1
        assert len(inverse.nonzero_terms()) == 4

    def test_minus_one_constant(self):
        t, x, _ = TruncatedSeries.gens(CAPS)
        a = -1 + t + x
        assert a * reciprocal(a) == TruncatedSeries.one(CAPS)

    def test_non_unit(self):
        t, _, _ = TruncatedSeries.gens(CAPS)
        with self.assertRaises(ValueError):
            reciprocal(2 + t)
        with self.assertRaises(ValueError):
            reciprocal(t)

    @settings(max_examples=50, deadline=None)
    @given(small_series)
    def test_inverse(self, a):
        a = unit(a)
        inverse = reciprocal(a)
        assert a * inverse == TruncatedSeries.one(CAPS)
        assert reciprocal(inverse) == a


class TestRendering(unittest.TestCase):
    def test_pretty(self):
        t, x, y = TruncatedSeries.gens(CAPS)
        assert TruncatedSeries.zero(CAPS).pretty() == "0"
        assert (1 + t * x - 2 * y * y).pretty() == "1 - 2*y^2 + t*x"
        assert (-t).pretty() == "-t"

    def test_frame(self):
        t, x, _ = TruncatedSeries.gens(CAPS)
        frame = series_to_frame(1 + 3 * t * x)
        assert list(frame.columns) == ["t", "x", "y", "coefficient"]
        assert frame.values.tolist() == [[0, 0, 0, 1], [1, 1, 0, 3]]
        full = series_to_frame(1 + t, include_zeros=True)
        assert len(full) == 4 * 3 * 3


if __name__ == "__main__":
    unittest.main(verbosity=1)
