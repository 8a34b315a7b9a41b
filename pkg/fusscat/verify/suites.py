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
Verification suites. Each check returns the first counterexample it meets,
as a JSON-friendly list, or None.
"""
import random
from collections import Counter
from itertools import product

from fusscat.exact.core import (
    b3_closed,
    b3_closed_symmetric,
    b3_prime,
    b3_prime_correction,
    ballot,
    ballot_probability,
    bp_closed,
    catalan,
    cycle_lemma_count,
    fuss_catalan,
    stat_index,
)
from fusscat.lattice.cycle import (
    even_cyclic_shifts,
    expected_good_fraction,
    good_shift_fraction,
    random_class_word,
    smallest_period,
    word_class,
)
from fusscat.lattice.path import (
    binary_truncate,
    distribution,
    enumerate_paths,
    extend_path,
    is_valid,
    path_stats,
    truncate_path,
)
from fusscat.lattice.tree import (
    enumerate_trees,
    last_right_string_involution,
    path_to_tree,
    tree_stats,
    tree_to_path,
)
from fusscat.series.generating import (
    build_F,
    cubic_residual,
    rational_b3prime,
    residual_F,
    residual_G,
    residual_G_swapped,
    solve_G,
)
from fusscat.simplex.prime_grid import build_prime_grid
from fusscat.simplex.simplex import build_simplex, simplex_keys
from fusscat.verify.base.suite_module import (
    SuiteModule,
    first_failure,
    first_mismatch,
)

TERNARY_FIRST_SUMS = (1, 3, 12, 55, 273)
PRIME_SECTION_N3 = (
    (1, 2, 2, 0, -5),
    (2, 3, 0, -10, -30),
    (2, 0, -12, -40, -90),
    (0, -10, -40, -100, -200),
    (-5, -30, -90, -200, -375),
)


def _simplex_cells(simplex):
    for n, layer in simplex.sections():
        for ks, value in layer.items():
            yield n, ks, value


def _series_mismatch(series, expected):
    """
    First monomial [i, j, k] where the series differs from expected(i, j, k).
    """
    caps = series.caps
    return first_mismatch(
        ([i, j, k], series.coefficient(i, j, k), expected(i, j, k))
        for i, j, k in product(*(range(c + 1) for c in caps))
    )


def _first_nonzero(series):
    terms = series.nonzero_terms()
    if not terms:
        return None
    return list(terms[0][0])


class ClosedVsRecurrence(SuiteModule):
    """
    Closed forms against the arrays built from the summation recurrences.
    """

    name = "closed-vs-recurrence"
    args = {
        "n_max_ballot": 25,
        "n_max_ternary": 20,
        "p_min": 2,
        "p_max": 4,
        "n_max": 8,
        "box_sum_p_max": 3,
        "box_sum_n_max": 6,
    }
    full_args = {
        "n_max_ballot": 30,
        "n_max_ternary": 25,
        "p_max": 6,
        "n_max": 12,
        "box_sum_p_max": 4,
        "box_sum_n_max": 8,
    }

    def checks(self):
        a = self.args
        yield (
            "ballot-vs-triangle",
            {"n_max": a.n_max_ballot},
            self.ballot_vs_triangle,
        )
        yield (
            "ballot-recurrence",
            {"n_max": a.n_max_ballot},
            self.ballot_recurrence,
        )
        yield (
            "b3-closed-forms",
            {"n_max": a.n_max_ternary},
            self.b3_closed_forms,
        )
        yield (
            "b3-closed-recurrence",
            {"n_max": a.n_max_ternary},
            self.b3_closed_recurrence,
        )
        for p in self.arities():
            yield (
                "bp-closed-vs-simplex-p{}".format(p),
                {"p": p, "n_max": a.n_max},
                lambda p=p: self.bp_closed_vs_simplex(p),
            )
        for p in range(2, min(a.p_max, a.box_sum_p_max) + 1):
            if p < a.p_min:
                continue
            yield (
                "box-sum-vs-recurrence-p{}".format(p),
                {"p": p, "n_max": a.box_sum_n_max},
                lambda p=p: self.box_sum_vs_recurrence(p),
            )

    def ballot_vs_triangle(self):
        triangle = build_simplex(2, self.args.n_max_ballot)
        return first_mismatch(
            ([n, k], value, ballot(n, k))
            for n, ks, value in _simplex_cells(triangle)
            for k in ks
        )

    def ballot_recurrence(self):
        return first_mismatch(
            ([n, k], ballot(n, k), ballot(n - 1, k) + ballot(n, k - 1))
            for n in range(2, self.args.n_max_ballot + 1)
            for k in range(n)
        )

    def b3_closed_forms(self):
        n_max = self.args.n_max_ternary
        return first_failure(
            (
                [n, k, l],
                b3_closed(n, k, l)
                == b3_closed_symmetric(n, k, l)
                == cycle_lemma_count(n, k, l)
                == b3_closed(n, l, k),
            )
            for n in range(1, n_max + 1)
            for k in range(n + 1)
            for l in range(n + 1)
        )

    def b3_closed_recurrence(self):
        n_max = self.args.n_max_ternary
        return first_mismatch(
            (
                [n, k, l],
                b3_closed(n, k, l),
                b3_closed(n - 1, k, l)
                + b3_closed(n, k - 1, l)
                + b3_closed(n, k, l - 1)
                - b3_closed(n, k - 1, l - 1),
            )
            for n in range(2, n_max + 1)
            for k, l in simplex_keys(3, n)
        )

    def bp_closed_vs_simplex(self, p):
        simplex = build_simplex(p, self.args.n_max)
        mismatch = first_mismatch(
            ([n] + list(ks), value, bp_closed(stat_index(p, n, ks)))
            for n, ks, value in _simplex_cells(simplex)
        )
        if mismatch is not None:
            return mismatch
        # symmetric in the statistics
        return first_mismatch(
            (
                [n] + list(ks),
                simplex.layer(n)[ks],
                simplex.layer(n)[tuple(sorted(ks))],
            )
            for n, ks, _ in _simplex_cells(simplex)
        )

    def box_sum_vs_recurrence(self, p):
        n_max = self.args.box_sum_n_max
        literal = build_simplex(p, n_max, method="box_sum")
        fast = build_simplex(p, n_max)
        return first_mismatch(
            ([n] + list(ks), value, fast.layer(n)[ks])
            for n, ks, value in _simplex_cells(literal)
        )


class Sums(SuiteModule):
    """
    Layer sums against the Catalan and Fuss-Catalan numbers.
    """

    name = "sums"
    args = {
        "n_max_catalan": 30,
        "n_max_ternary": 12,
        "p_min": 2,
        "p_max": 4,
        "n_max": 8,
    }
    full_args = {"n_max_ternary": 20, "p_max": 6, "n_max": 12}

    @classmethod
    def apply_overrides(cls, args, p=None, n_max=None):
        args = super(Sums, cls).apply_overrides(args, p, n_max)
        if n_max is not None and p == 3:
            args["n_max_ternary"] = n_max
        return args

    def checks(self):
        a = self.args
        yield (
            "ballot-row-sums",
            {"n_max": a.n_max_catalan},
            self.ballot_row_sums,
        )
        if a.p_min <= 3 <= a.p_max:
            yield (
                "ternary-layer-sums",
                {"n_max": a.n_max_ternary},
                self.ternary_layer_sums,
            )
        for p in self.arities():
            yield (
                "layer-sums-p{}".format(p),
                {"p": p, "n_max": a.n_max},
                lambda p=p: self.layer_sums(p),
            )
            yield (
                "closed-sums-p{}".format(p),
                {"p": p, "n_max": a.n_max},
                lambda p=p: self.closed_sums(p),
            )

    def ballot_row_sums(self):
        return first_mismatch(
            ([n], sum(ballot(n, k) for k in range(n)), catalan(n))
            for n in range(1, self.args.n_max_catalan + 1)
        )

    def ternary_layer_sums(self):
        tetrahedron = build_simplex(3, self.args.n_max_ternary)
        mismatch = first_mismatch(
            ([n], layer.total(), fuss_catalan(3, n))
            for n, layer in tetrahedron.sections()
        )
        if mismatch is not None:
            return mismatch
        return first_mismatch(
            ([n], tetrahedron.layer_sum(n), expected)
            for n, expected in enumerate(TERNARY_FIRST_SUMS, start=1)
            if n <= tetrahedron.n_max
        )

    def layer_sums(self, p):
        simplex = build_simplex(p, self.args.n_max)
        return first_mismatch(
            ([n], layer.total(), fuss_catalan(p, n))
            for n, layer in simplex.sections()
        )

    def closed_sums(self, p):
        return first_mismatch(
            (
                [n],
                sum(bp_closed(stat_index(p, n, ks)) for ks in simplex_keys(p, n)),
                fuss_catalan(p, n),
            )
            for n in range(1, self.args.n_max + 1)
        )


class Enumeration(SuiteModule):
    """
    Exhaustive path enumeration against the simplex.
    """

    name = "enumeration"
    args = {"n_max_by_p": {"2": 6, "3": 6, "4": 6}, "n_max_truncation": 5}
    full_args = {
        "n_max_by_p": {"2": 10, "3": 8, "4": 6},
        "n_max_truncation": 6,
    }

    @classmethod
    def apply_overrides(cls, args, p=None, n_max=None):
        args = dict(args)
        bounds = dict(args["n_max_by_p"])
        if p is not None:
            bounds = {str(p): bounds.get(str(p), 6)}
        if n_max is not None:
            bounds = {key: n_max for key in bounds}
            args["n_max_truncation"] = min(args["n_max_truncation"], n_max)
        args["n_max_by_p"] = bounds
        return args

    def checks(self):
        bounds = self.args.n_max_by_p
        for p in sorted(int(key) for key in bounds):
            n_max = bounds[str(p)]
            yield (
                "path-count-p{}".format(p),
                {"p": p, "n_max": n_max},
                lambda p=p, n_max=n_max: self.path_count(p, n_max),
            )
            yield (
                "distribution-p{}".format(p),
                {"p": p, "n_max": n_max},
                lambda p=p, n_max=n_max: self.distribution_vs_simplex(p, n_max),
            )
            n_trunc = min(n_max, self.args.n_max_truncation)
            yield (
                "truncation-bijection-p{}".format(p),
                {"p": p, "n_max": n_trunc},
                lambda p=p, n_max=n_trunc: self.truncation_bijection(p, n_max),
            )

    @staticmethod
    def path_count(p, n_max):
        return first_mismatch(
            ([n], len(enumerate_paths(p, n)), fuss_catalan(p, n))
            for n in range(1, n_max + 1)
        )

    @staticmethod
    def distribution_vs_simplex(p, n_max):
        simplex = build_simplex(p, n_max)
        for n, layer in simplex.sections():
            counts = distribution(p, n)
            for ks in sorted(set(counts) | set(layer.keys)):
                if counts.get(ks, 0) != layer[ks]:
                    return [n] + list(ks)
        return None

    @staticmethod
    def truncation_bijection(p, n_max):
        for n in range(1, n_max + 1):
            for path in enumerate_paths(p, n):
                ks = path_stats(path).ks
                shorter = truncate_path(path)
                if (
                    not is_valid(shorter)
                    or shorter.nb_down != n - 1
                    or any(i > k for i, k in zip(path_stats(shorter).ks, ks))
                    or extend_path(shorter, ks) != path
                    or (p == 2 and binary_truncate(path) != shorter)
                ):
                    return [p, path.steps]
            for shorter in enumerate_paths(p, n - 1):
                base = path_stats(shorter).ks
                for ks in product(*(range(i, n) for i in base)):
                    if sum(ks) >= n:
                        continue
                    longer = extend_path(shorter, ks)
                    if (
                        not is_valid(longer)
                        or path_stats(longer).ks != ks
                        or truncate_path(longer) != shorter
                    ):
                        return [p, shorter.steps] + list(ks)
        return None


class Involution(SuiteModule):
    """
    Tree/path bijection, the tree statistic and the ternary involution.
    """

    name = "involution"
    args = {"p_min": 2, "p_max": 4, "n_max": 5}
    full_args = {"n_max": 6}

    def checks(self):
        a = self.args
        for p in self.arities():
            yield (
                "tree-bijection-p{}".format(p),
                {"p": p, "n_max": a.n_max},
                lambda p=p: self.tree_bijection(p),
            )
            yield (
                "tree-stats-p{}".format(p),
                {"p": p, "n_max": a.n_max},
                lambda p=p: self.tree_stats_vs_path(p),
            )
        if a.p_min <= 3 <= a.p_max:
            yield ("involution", {"p": 3, "n_max": a.n_max}, self.involution)
            yield (
                "class-sizes",
                {"p": 3, "n_max": a.n_max},
                self.class_sizes,
            )

    def tree_bijection(self, p):
        for n in range(1, self.args.n_max + 1):
            trees = enumerate_trees(p, n)
            if len(trees) != fuss_catalan(p, n):
                return [n]
            images = [tree_to_path(tree, p) for tree in trees]
            if len(set(images)) != len(trees):
                return [n]
            if set(images) != set(enumerate_paths(p, n)):
                return [n]
            for tree, path in zip(trees, images):
                if path_to_tree(path) != tree:
                    return [n, str(tree)]
                if tree_to_path(path_to_tree(path), p) != path:
                    return [n, path.steps]
        return None

    def tree_stats_vs_path(self, p):
        return first_failure(
            ([n, str(tree)], tree_stats(tree, p) == path_stats(tree_to_path(tree, p)))
            for n in range(1, self.args.n_max + 1)
            for tree in enumerate_trees(p, n)
        )

    def involution(self):
        for n in range(1, self.args.n_max + 1):
            for tree in enumerate_trees(3, n):
                image = last_right_string_involution(tree)
                stats, image_stats = tree_stats(tree, 3), tree_stats(image, 3)
                if (
                    last_right_string_involution(image) != tree
                    or image_stats.ks != stats.ks[::-1]
                    or image_stats.last_run != stats.last_run
                ):
                    return [n, str(tree)]
        return None

    def class_sizes(self):
        tetrahedron = build_simplex(3, self.args.n_max)
        for n, layer in tetrahedron.sections():
            sizes = Counter(tree_stats(tree, 3).ks for tree in enumerate_trees(3, n))
            for ks in sorted(set(sizes) | set(layer.keys)):
                if sizes[ks] != layer[ks] or sizes[ks] != sizes[ks[::-1]]:
                    return [n] + list(ks)
        return None


class CycleLemma(SuiteModule):
    """
    Random free words: share of good even shifts, orbit sizes, periodic words.
    """

    name = "cycle-lemma"
    args = {"n_max": 6, "k_max": 2, "l_max": 2, "samples": 100, "seed": 0}
    full_args = {"n_max": 8, "k_max": 3, "l_max": 3, "samples": 1000}

    def classes(self, n_max):
        a = self.args
        for n in range(1, n_max + 1):
            for k in range(min(a.k_max, n - 1) + 1):
                for l in range(min(a.l_max, n - 1 - k) + 1):
                    yield n, k, l

    def checks(self):
        a = self.args
        bound = {
            "n_max": a.n_max,
            "k_max": a.k_max,
            "l_max": a.l_max,
            "samples": a.samples,
        }
        yield ("random-words", bound, self.random_words)
        yield ("periodic-words", bound, self.periodic_words)
        yield ("classical-ballot", bound, self.classical_ballot)

    def _check_word(self, word, n, k, l, period_count=1):
        if word_class(word) != (n, (k, l)):
            return False
        fraction = good_shift_fraction(word)
        if fraction != expected_good_fraction(word):
            return False
        if fraction * (n + k) != n - k - l:
            return False
        shifts = even_cyclic_shifts(word)
        if len(set(shifts)) != len(shifts):
            return False
        if smallest_period(word) * period_count == len(word):
            return len(shifts) * period_count == n + k
        return True

    def random_words(self):
        rng = random.Random(self.args.seed)
        for n, k, l in self.classes(self.args.n_max):
            for _ in range(self.args.samples):
                word = random_class_word(n, (k, l), rng)
                if not self._check_word(word, n, k, l):
                    return [word]
        return None

    def classical_ballot(self):
        """
        Arity 2: every rotation is even and the share of good ones is the
        ballot probability.
        """
        rng = random.Random(self.args.seed + 2)
        for a in range(1, self.args.n_max + 1):
            for b in range(a):
                for _ in range(self.args.samples):
                    word = random_class_word(a, (b,), rng, p=2)
                    if good_shift_fraction(word, p=2) != ballot_probability(a, b):
                        return [word]
        return None

    def periodic_words(self):
        rng = random.Random(self.args.seed + 1)
        samples = max(1, self.args.samples // 10)
        for n, k, l in self.classes(self.args.n_max // 2):
            for repeats in range(2, self.args.n_max // n + 1):
                for _ in range(samples):
                    word = random_class_word(n, (k, l), rng) * repeats
                    if not self._check_word(
                        word, n * repeats, k * repeats, l * repeats, repeats
                    ):
                        return [word]
        return None


class Prime(SuiteModule):
    """
    The extended grid against its closed form and the tetrahedron.
    """

    name = "prime"
    args = {"box": 8}
    full_args = {"box": 12}

    @classmethod
    def apply_overrides(cls, args, p=None, n_max=None):
        args = dict(args)
        if n_max is not None:
            args["box"] = n_max
        return args

    def checks(self):
        bound = {"box": self.args.box}
        yield ("grid-vs-closed", bound, self.grid_vs_closed)
        yield ("closed-recurrence", bound, self.closed_recurrence)
        yield ("grid-vs-tetrahedron", bound, self.grid_vs_tetrahedron)
        yield ("section-n3", {"n": 3, "k_max": 4, "l_max": 4}, self.section_n3)

    def grid_vs_closed(self):
        box = self.args.box
        grid = build_prime_grid(box, box, box)
        return first_mismatch(
            (list(nkl), value, b3_prime(*nkl)) for nkl, value in grid.cells()
        )

    def closed_recurrence(self):
        box = self.args.box
        return first_mismatch(
            (
                [n, k, l],
                b3_prime(n, k, l),
                b3_prime(n - 1, k, l)
                + b3_prime(n, k - 1, l)
                + b3_prime(n, k, l - 1)
                - b3_prime(n, k - 1, l - 1)
                + b3_prime_correction(n, k, l),
            )
            for n, k, l in product(range(box + 1), repeat=3)
        )

    def grid_vs_tetrahedron(self):
        box = self.args.box
        if box < 1:
            return None
        grid = build_prime_grid(box, box, box)
        tetrahedron = build_simplex(3, box)
        return first_mismatch(
            ([n, k, l], grid[n, k, l], value)
            for n, (k, l), value in _simplex_cells(tetrahedron)
        )

    def section_n3(self):
        section = build_prime_grid(3, 4, 4).section(3)
        return first_mismatch(
            ([3, k, l], section[k, l], expected)
            for k, row in enumerate(PRIME_SECTION_N3)
            for l, expected in enumerate(row)
        )


class GeneratingFunctions(SuiteModule):
    """
    Identities between F, G and the tetrahedron on truncated series.
    """

    name = "gf"
    args = {"order": 8}

    CHECK_GROUPS = {
        "F": ("F-coefficients", "F-functional"),
        "G-cubic": ("G-cubic", "G-functional", "G-collapsed-sums"),
        "prime-rational": ("prime-rational", "prime-rational-vs-grid"),
    }

    def __init__(self, args):
        super(GeneratingFunctions, self).__init__(args)
        self._G = None

    @classmethod
    def apply_overrides(cls, args, p=None, n_max=None):
        args = dict(args)
        if n_max is not None:
            args["order"] = n_max
        return args

    @property
    def caps(self):
        order = self.args.order
        return order, order, order

    @property
    def G(self):
        if self._G is None:
            self._G = solve_G(self.caps)
        return self._G

    def checks(self, groups=None):
        """
        :param groups: Optional[Iterable[str]] keys of CHECK_GROUPS
        """
        bound = {"caps": list(self.caps)}
        by_name = {
            "F-coefficients": self.F_coefficients,
            "F-functional": self.F_functional,
            "G-cubic": self.G_cubic,
            "G-functional": self.G_functional,
            "G-collapsed-sums": self.G_collapsed_sums,
            "prime-rational": self.prime_rational,
            "prime-rational-vs-grid": self.prime_rational_vs_grid,
        }
        groups = sorted(self.CHECK_GROUPS) if groups is None else groups
        for group in groups:
            for check_name in self.CHECK_GROUPS[group]:
                yield check_name, bound, by_name[check_name]

    def F_coefficients(self):
        F = build_F(self.G)

        def expected(n, k, l):
            if n == 0:
                return 1 if k == l == 0 else 0
            return b3_closed(n, k, l)

        return _series_mismatch(F, expected)

    def F_functional(self):
        return _first_nonzero(residual_F(build_F(self.G), self.G))

    def G_cubic(self):
        return _first_nonzero(cubic_residual(self.G))

    def G_functional(self):
        return _first_nonzero(residual_G(self.G)) or _first_nonzero(
            residual_G_swapped(self.G)
        )

    def G_collapsed_sums(self):
        def expected(n, j, l):
            if n == 0:
                return 1 if j == l == 0 else 0
            if j + l != n:
                return 0
            return sum(b3_closed(n, k, l) for k in range(n - l))

        return _series_mismatch(self.G, expected)

    def prime_rational(self):
        return _series_mismatch(rational_b3prime(self.caps), b3_prime)

    def prime_rational_vs_grid(self):
        order = self.args.order
        grid = build_prime_grid(order, order, order)
        return _series_mismatch(
            rational_b3prime(self.caps), lambda n, k, l: grid[n, k, l]
        )
