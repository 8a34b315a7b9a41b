import unittest
from unittest import mock

from fusscat.exact import b3_closed, b3_prime
from fusscat.series import (
    TruncatedSeries,
    build_F,
    cubic_residual,
    rational_b3prime,
    residual_F,
    residual_G,
    residual_G_swapped,
    solve_G,
)
from fusscat.simplex import build_prime_grid

CAPS = (8, 8, 8)


class TestG(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.G = solve_G(CAPS)

    def test_low_order_coefficients(self):
        assert self.G.coefficient(0, 0, 0) == 1
        assert self.G.coefficient(1, 1, 0) == 1
        assert self.G.coefficient(2, 2, 0) == 2
        assert self.G.coefficient(2, 1, 1) == 1

    def test_cubic(self):
        assert cubic_residual(self.G).is_zero()

    def test_functional_equations(self):
        assert residual_G(self.G).is_zero()
        assert residual_G_swapped(self.G).is_zero()

    def test_collapsed_sums(self):
        for n in range(1, 9):
            for l in range(n + 1):
                expected = sum(b3_closed(n, k, l) for k in range(n - l))
                assert self.G.coefficient(n, n - l, l) == expected

    def test_homogeneous(self):
        for (i, j, k), _ in self.G.nonzero_terms():
            assert j + k == i

    def test_asymmetric_caps(self):
        with self.assertRaises(ValueError):
            solve_G((3, 3, 2))

    def test_non_convergence(self):
        # an iterate that never settles must be reported
        stuck = mock.patch.object(
            TruncatedSeries,
            "__eq__",
            lambda self, other: False,
        )
        with stuck:
            with self.assertRaises(ArithmeticError):
                solve_G((2, 2, 2))


class TestF(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.G = solve_G(CAPS)
        cls.F = build_F(cls.G)

    def test_examples(self):
        assert self.F.coefficient(0, 0, 0) == 1
        assert self.F.coefficient(1, 0, 0) == 1
        assert self.F.coefficient(3, 1, 1) == 3

    def test_coefficients_are_tetrahedron(self):
        for n in range(1, 9):
            for k in range(9):
                for l in range(9):
                    assert self.F.coefficient(n, k, l) == b3_closed(n, k, l)

    def test_functional_equation(self):
        assert residual_F(self.F, self.G).is_zero()

    def test_order_one(self):
        G = solve_G((1, 1, 1))
        assert build_F(G).coefficient(1, 0, 0) == 1


class TestRational(unittest.TestCase):
    def test_examples(self):
        series = rational_b3prime(CAPS)
        assert series.coefficient(3, 2, 2) == -12
        assert series.coefficient(1, 0, 0) == 1

    def test_matches_closed_form_and_grid(self):
        series = rational_b3prime(CAPS)
        grid = build_prime_grid(8, 8, 8)
        for (n, k, l), value in grid.cells():
            assert series.coefficient(n, k, l) == value == b3_prime(n, k, l)


if __name__ == "__main__":
    unittest.main(verbosity=1)
