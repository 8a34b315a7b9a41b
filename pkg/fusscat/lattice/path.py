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
Lattice paths with up steps (1, 1) and down steps (1, -(p-1)) that stay
at height >= 0 and return to 0: Dyck paths for p = 2, 2-Dyck paths for
p = 3. Paths are stored as "U"/"D" strings.
"""
from collections import Counter, namedtuple
from itertools import accumulate

from fusscat.exact.core import check_arity, fuss_catalan
from fusscat.utils.util import check_resource, enumeration_limit

UP = "U"
DOWN = "D"

PathStats = namedtuple("PathStats", ["n", "last_run", "ks"])


class LatticePath(namedtuple("LatticePath", ["p", "steps"])):
    __slots__ = ()

    def __str__(self):
        return self.steps

    def __len__(self):
        return len(self.steps)

    @property
    def drop(self):
        return self.p - 1

    @property
    def nb_down(self):
        return self.steps.count(DOWN)

    @property
    def nb_up(self):
        return self.steps.count(UP)

    def heights(self):
        """
        Height after each step.

        :return: List[int]
        """
        return list(accumulate(step_delta(s, self.p) for s in self.steps))


def step_delta(step, p):
    if step == UP:
        return 1
    if step == DOWN:
        return -(p - 1)
    raise ValueError('Unknown step "{}", expected U or D'.format(step))


def parse_path(p, text):
    """
    :param p: int arity
    :param text: str over {U, D}
    :return: LatticePath
    """
    check_arity(p)
    text = text.strip()
    for step in text:
        step_delta(step, p)
    return LatticePath(p, text)


def is_valid(path):
    heights = path.heights()
    if any(h < 0 for h in heights):
        return False
    if heights and heights[-1] != 0:
        return False
    return path.nb_up == (path.p - 1) * path.nb_down


def check_valid(path):
    if not is_valid(path):
        raise ValueError(
            "{} is not a valid path for arity {}".format(path.steps, path.p)
        )
    return path


def iter_paths(p, n):
    """
    Valid paths with n down steps, lexicographic with U < D. Any prefix
    that stays >= 0 can be completed, so the search never backtracks.
    """
    check_arity(p)
    nb_up = (p - 1) * n
    stack = [("", 0, 0, 0)]
    while stack:
        prefix, ups, downs, height = stack.pop()
        if ups == nb_up and downs == n:
            yield LatticePath(p, prefix)
            continue
        # Pushed in reverse so that U is explored first.
        if downs < n and height >= p - 1:
            stack.append((prefix + DOWN, ups, downs + 1, height - (p - 1)))
        if ups < nb_up:
            stack.append((prefix + UP, ups + 1, downs, height + 1))


def enumerate_paths(p, n, limit=None):
    """
    :param p: int arity
    :param n: int number of down steps
    :param limit: Optional[int] enumeration guard, see enumeration_limit
    :return: List[LatticePath]
    """
    check_resource("paths", fuss_catalan(p, n), enumeration_limit(limit))
    return list(iter_paths(p, n))


def last_run_length(steps):
    return len(steps) - len(steps.rstrip(DOWN))


def path_stats(path):
    """
    n, length of the terminal run of down steps, and for each residue r
    of p-1 the number of other down steps whose end point has height
    congruent to r.

    :return: PathStats
    """
    check_valid(path)
    p, steps = path.p, path.steps
    last_run = last_run_length(steps)
    body = len(steps) - last_run
    ks = [0] * (p - 1)
    for step, height in zip(steps[:body], path.heights()):
        if step == DOWN:
            ks[height % (p - 1)] += 1
    return PathStats(path.nb_down, last_run, tuple(ks))


def distribution(p, n, limit=None):
    """
    Number of paths per statistic vector.

    :return: Dict[Tuple[int, ...], int] sorted by key
    """
    counts = Counter(path_stats(path).ks for path in enumerate_paths(p, n, limit))
    return dict(sorted(counts.items()))


def truncate_path(path):
    """
    Keep the path up to its ((p-1)(n-1))-th up step and complete it with
    down steps. Sends a path with n down steps and statistics ks to one
    with n-1 down steps and statistics componentwise <= ks.
    """
    check_valid(path)
    p, n = path.p, path.nb_down
    if n < 1:
        raise ValueError("The empty path has no truncation")
    target_ups = (p - 1) * (n - 1)
    ups = 0
    cut = 0
    while ups < target_ups:
        if path.steps[cut] == UP:
            ups += 1
        cut += 1
    prefix = path.steps[:cut]
    height = prefix.count(UP) - (p - 1) * prefix.count(DOWN)
    return LatticePath(p, prefix + DOWN * (height // (p - 1)))


def extend_path(path, ks):
    """
    Inverse of truncate_path for a target statistic vector ks: drop the last
    down run, then for each residue class r draw ks[r] - is[r] down steps
    followed by one up step, and complete with down steps.
    """
    check_valid(path)
    p = path.p
    current = path_stats(path)
    ks = tuple(ks)
    if len(ks) != p - 1 or any(k < i for k, i in zip(ks, current.ks)):
        raise ValueError(
            "Statistics {} do not dominate {}".format(ks, current.ks)
        )
    if sum(ks) > current.n:
        raise ValueError(
            "Statistics {} need more than {} down steps".format(ks, current.n + 1)
        )
    steps = path.steps[: len(path.steps) - current.last_run]
    for k, i in zip(ks, current.ks):
        steps += DOWN * (k - i) + UP
    height = steps.count(UP) - (p - 1) * steps.count(DOWN)
    return LatticePath(p, steps + DOWN * (height // (p - 1)))



def binary_truncate(path):
    """
    Dyck path case: erase the last up step and the down step right after
    it. Same map as truncate_path for p = 2.
    """
    check_valid(path)
    if path.p != 2:
        raise ValueError("binary_truncate needs arity 2, got {}".format(path.p))
    if not path.steps:
        raise ValueError("The empty path has no truncation")
    last_up = path.steps.rindex(UP)
    steps = path.steps[:last_up] + path.steps[last_up + 2 :]
    return LatticePath(2, steps)
