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
Closed forms for the Catalan family of numbers, in exact integer arithmetic.

Every function returns 0 outside the support of the family instead of
raising, so recurrences can be checked uniformly at the boundary. Exact
divisions go through ``exact_div`` which asserts a zero remainder.
"""
from collections import namedtuple
from fractions import Fraction
from math import comb, prod

StatIndex = namedtuple("StatIndex", ["p", "n", "ks"])


def stat_index(p, n, ks):
    """
    Build a validated index (p, n, k_1..k_{p-1}).

    :param p: int arity >= 2
    :param n: int
    :param ks: Iterable[int] of length p - 1
    :return: StatIndex
    """
    check_arity(p)
    ks = tuple(int(k) for k in ks)
    if len(ks) != p - 1:
        raise ValueError(
            "Arity {} needs {} statistics, got {}".format(p, p - 1, len(ks))
        )
    return StatIndex(p, int(n), ks)


def check_arity(p):
    if p < 2:
        raise ValueError("Arity must be >= 2, got {}".format(p))
    return p


def exact_div(numerator, denominator):
    quotient, remainder = divmod(numerator, denominator)
    assert remainder == 0, "{} is not divisible by {}".format(
        numerator, denominator
    )
    return quotient


def binomial(a, b):
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def catalan(n):
    return exact_div(binomial(2 * n, n), n + 1)


def fuss_catalan(p, n):
    """
    Number of p-ary trees with n internal nodes, C_p(0) = 1.
    """
    check_arity(p)
    if n < 0:
        return 0
    if n == 0:
        return 1
    return exact_div(binomial(p * n, n), (p - 1) * n + 1)


def ballot_general(a, b):
    """
    Number of vote countings of a votes against b votes during which the
    first candidate stays strictly ahead: (a-b)/(a+b) * C(a+b, a).
    """
    if b < 0 or a <= b:
        return 0
    return exact_div((a - b) * binomial(a + b, a), a + b)


def ballot(n, k):
    """
    Entry B(n, k) of the Catalan triangle, 0 when k >= n.
    """
    if n < 1 or k < 0 or k >= n:
        return 0
    return ballot_general(n, k)


def ballot_probability(a, b):
    """
    Probability that the winner stays ahead during the whole counting.

    :return: Fraction, always (a-b)/(a+b)
    """
    if b < 0:
        raise ValueError("Vote count b must be >= 0, got {}".format(b))
    if a <= b:
        raise ValueError(
            "The winner needs more votes: a={} must exceed b={}".format(a, b)
        )
    probability = Fraction(ballot_general(a, b), binomial(a + b, a))
    assert probability == Fraction(a - b, a + b)
    return probability


def b3_closed(n, k, l):
    if n < 1 or k < 0 or l < 0 or k + l >= n:
        return 0
    return exact_div(
        binomial(n + k, k) * binomial(n + l - 1, l) * (n - k - l), n + k
    )


def b3_closed_symmetric(n, k, l):
    """
    The product form symmetric in k and l, same values as b3_closed.
    """
    if n < 1 or k < 0 or l < 0 or k + l >= n:
        return 0
    return exact_div(
        binomial(n + k - 1, k) * binomial(n + l - 1, l) * (n - k - l), n
    )


def cycle_lemma_count(n, k, l):
    """
    Arrangements of the even and odd places, times the share of each even
    orbit that lands in the class (n, k, l).
    """
    if n < 1 or k < 0 or l < 0 or k + l >= n:
        return 0
    even_places = binomial(n + k, k)
    odd_places = binomial(n - 1 + l, l)
    share = Fraction(n - k - l, n + k)
    count = even_places * odd_places * share
    assert count.denominator == 1
    return count.numerator


def bp_closed(idx):
    """
    B_p(n, k_1, ..., k_{p-1}) from the product of binomials.

    :param idx: StatIndex
    :return: int
    """
    n, ks = idx.n, idx.ks
    if len(ks) != idx.p - 1:
        raise ValueError(
            "Arity {} needs {} statistics, got {}".format(
                idx.p, idx.p - 1, len(ks)
            )
        )
    total = sum(ks)
    if n < 1 or min(ks, default=0) < 0 or total >= n:
        return 0
    return exact_div(
        prod(binomial(n + k - 1, k) for k in ks) * (n - total), n
    )


def b3_prime(n, k, l):
    """
    Redundant extension of B_3 to every k, l >= 0. Negative once k + l > n.

    The n = 0 plane is the one produced by the corrected recurrence:
    -1 on the two axes away from the origin, 0 elsewhere.
    """
    if n < 0 or k < 0 or l < 0:
        return 0
    if n == 0:
        return -1 if (k == 0) != (l == 0) else 0
    return exact_div(
        binomial(n + k - 1, k) * binomial(n + l - 1, l) * (n - k - l), n
    )


_B3_PRIME_CORRECTIONS = {
    (1, 0, 0): 1,
    (0, 1, 0): -1,
    (0, 0, 1): -1,
    (0, 1, 1): 2,
}


def b3_prime_correction(n, k, l):
    return _B3_PRIME_CORRECTIONS.get((n, k, l), 0)
