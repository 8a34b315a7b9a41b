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
Cyclic shifts of free step words and the counting argument behind the
explicit formula for B_3.

A cut point i of a word w splits it as w[:i] + w[i:]; the rotation at i is
w[i:] + w[:i]. A cut point is even when the height reached after w[:i] is
a multiple of p - 1 (plain parity for p = 3). Rotating at an even cut keeps
the residue class of every step's height.
"""
from fractions import Fraction
from itertools import accumulate

from fusscat.exact.core import check_arity
from fusscat.lattice.path import DOWN, UP, step_delta


def cut_heights(word, p=3):
    """
    Height before each step, plus the final height.

    :return: List[int] of length len(word) + 1
    """
    return [0] + list(accumulate(step_delta(step, p) for step in word))


def smallest_period(word):
    if not word:
        return 0
    return (word + word).find(word, 1)


def word_class(word, p=3):
    """
    (n, ks) of a word with (p-1)n up steps: ks[r] counts the down steps
    whose end point has height congruent to r modulo p-1.
    """
    check_arity(p)
    nb_up = word.count(UP)
    if nb_up % (p - 1):
        raise ValueError(
            "{} up steps is not a multiple of {}".format(nb_up, p - 1)
        )
    ks = [0] * (p - 1)
    for step, height in zip(word, cut_heights(word, p)[1:]):
        if step == DOWN:
            ks[height % (p - 1)] += 1
    return nb_up // (p - 1), tuple(ks)


def _even_classes(word, p):
    heights = cut_heights(word, p)
    period = smallest_period(word)
    return heights, sorted(
        {i % period for i in range(len(word)) if heights[i] % (p - 1) == 0}
    )


def even_cyclic_shifts(word, p=3):
    """
    Distinct rotations of the word taken at even cut points, ordered by
    their first cut point.

    :return: List[str]
    """
    check_arity(p)
    if not word:
        return [word]
    _, classes = _even_classes(word, p)
    return [word[i:] + word[:i] for i in classes]


def is_good_shift(word, p=3):
    """
    Whether the word stays at height >= 0 and ends with an up step, so
    that completing it with down steps gives a valid path.
    """
    return (
        bool(word)
        and word[-1] == UP
        and min(cut_heights(word, p)) >= 0
    )


def good_shift_fraction(word, p=3):
    """
    Share of the even orbit of the word made of good shifts.

    :param word: str with (p-1)n up steps and a positive final height
    :return: Fraction, equal to (n - sum(ks)) / (n + ks[0])
    """
    check_arity(p)
    heights = cut_heights(word, p)
    total = heights[-1]
    if total <= 0:
        raise ValueError(
            "Word {} must end above its start, final height {}".format(
                word, total
            )
        )
    word_class(word, p)
    heights, classes = _even_classes(word, p)
    size = len(word)

    # Rotation at i is >= 0 iff no later height drops below heights[i] and
    # no earlier one, lifted by the total, does either.
    suffix_min = heights[:]
    for i in range(size - 1, -1, -1):
        suffix_min[i] = min(heights[i + 1], suffix_min[i + 1])
    prefix_min = [None] * (size + 1)
    for i in range(1, size + 1):
        prefix_min[i] = (
            heights[i] if i == 1 else min(heights[i], prefix_min[i - 1])
        )

    good = 0
    for i in classes:
        if word[i - 1] != UP:
            continue
        if suffix_min[i] < heights[i]:
            continue
        if i > 0 and total + prefix_min[i] < heights[i]:
            continue
        good += 1
    return Fraction(good, len(classes))


def expected_good_fraction(word, p=3):
    n, ks = word_class(word, p)
    return Fraction(n - sum(ks), n + ks[0])


def random_class_word(n, ks, rng, p=3):
    """
    A free word with (p-1)n up steps and, for each residue r, ks[r] down
    steps placed uniformly among the gaps reached after a number of up
    steps congruent to r.

    :param rng: random.Random
    """
    check_arity(p)
    nb_up = (p - 1) * n
    downs_per_gap = [0] * (nb_up + 1)
    for r, k in enumerate(ks):
        gaps = range(r, nb_up + 1, p - 1)
        for _ in range(k):
            downs_per_gap[rng.choice(gaps)] += 1
    word = DOWN * downs_per_gap[0]
    for gap in range(1, nb_up + 1):
        word += UP + DOWN * downs_per_gap[gap]
    return word
