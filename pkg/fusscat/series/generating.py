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
Generating functions of the tetrahedron:

    F(t,x,y) = 1 + sum B_3(n,k,l) t^n x^k y^l
    G(t,x,y) = 1 + sum B_3(n,k,l) t^n x^(n-l) y^l

G is the fixed point of G = 1 + t x G(t,x,y)^2 G(t,y,x), and
F = 1 / (1 - t G(t,x,y) G(t,y,x)).
"""
from fusscat.series.truncated import TruncatedSeries

DEFAULT_CAPS = (8, 8, 8)


def solve_G(caps=DEFAULT_CAPS):
    """
    Iterate G <- 1 + t x G^2 swap_xy(G) from G = 1. Each round fixes one
    more power of t, so the iterates become stationary within caps[0] + 1
    rounds.

    :param caps: Tuple[int, int, int], x and y caps must be equal
    :return: TruncatedSeries
    """
    t, x, _ = TruncatedSeries.gens(caps)
    one = TruncatedSeries.one(caps)
    tx = t * x
    g = one
    for _ in range(caps[0] + 1):
        nxt = one + tx * g * g * g.swap_xy()
        if nxt == g:
            return g
        g = nxt
    raise ArithmeticError(
        "Fixed point iteration for G did not settle within {} rounds".format(
            caps[0] + 1
        )
    )


def build_F(G):
    t, _, _ = TruncatedSeries.gens(G.caps)
    return (1 - t * G * G.swap_xy()).reciprocal()


def cubic_residual(G):
    """
    t x^2 G^3 + (y - x) G^2 + (x - 2y) G + y, zero for the true G.
    """
    t, x, y = TruncatedSeries.gens(G.caps)
    g2 = G * G
    return t * x * x * g2 * G + (y - x) * g2 + (x - 2 * y) * G + y


def residual_F(F, G):
    """
    F - (1 + G(t,x,y) G(t,y,x) t F).
    """
    t, _, _ = TruncatedSeries.gens(F.caps)
    return F - (1 + G * G.swap_xy() * t * F)


def residual_G(G):
    """
    G - (1 + G(t,x,y) G(t,y,x) t G(t,x,y) x).
    """
    t, x, _ = TruncatedSeries.gens(G.caps)
    return G - (1 + G * G.swap_xy() * t * G * x)


def residual_G_swapped(G):
    """
    The previous identity with x and y exchanged, evaluated on G(t,y,x).
    """
    t, _, y = TruncatedSeries.gens(G.caps)
    H = G.swap_xy()
    return H - (1 + H * G * t * H * y)


def rational_b3prime(caps=DEFAULT_CAPS):
    """
    (t - x - y + 2xy) / (1 - t - x - y + xy), the rational series whose
    coefficients are B'_3(n, k, l).
    """
    t, x, y = TruncatedSeries.gens(caps)
    numerator = t - x - y + 2 * x * y
    denominator = 1 - t - x - y + x * y
    return numerator * denominator.reciprocal()
