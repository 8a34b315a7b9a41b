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
Plane p-ary trees and their depth-first bijection with lattice paths.

Text format: a leaf is "•", an internal node is its children wrapped in
parentheses, e.g. "((•••)••)".
"""
from collections import namedtuple
from itertools import product

from fusscat.exact.core import check_arity, fuss_catalan
from fusscat.lattice.path import DOWN, UP, LatticePath, PathStats, check_valid
from fusscat.simplex.simplex import simplex_keys
from fusscat.utils.util import check_resource, enumeration_limit

LEAF_SYMBOL = "•"


class PAryTree(namedtuple("PAryTree", ["children"])):
    __slots__ = ()

    @property
    def is_leaf(self):
        return not self.children

    @property
    def arity(self):
        return len(self.children) if self.children else None

    @property
    def nb_internal(self):
        if self.is_leaf:
            return 0
        return 1 + sum(child.nb_internal for child in self.children)

    @property
    def nb_leaves(self):
        if self.is_leaf:
            return 1
        return sum(child.nb_leaves for child in self.children)

    def __str__(self):
        if self.is_leaf:
            return LEAF_SYMBOL
        return "(" + "".join(str(child) for child in self.children) + ")"

    def __repr__(self):
        return "PAryTree({})".format(self)


LEAF = PAryTree(())


def node(*children):
    return PAryTree(tuple(children))


def check_tree(tree, p):
    """
    Raise ValueError unless every internal node has exactly p children.
    """
    if tree.is_leaf:
        return tree
    if len(tree.children) != p:
        raise ValueError(
            "Node {} has {} children, expected {}".format(
                tree, len(tree.children), p
            )
        )
    for child in tree.children:
        check_tree(child, p)
    return tree


def _resolve_arity(tree, p):
    if p is None:
        if tree.is_leaf:
            raise ValueError("The arity of a single leaf must be given")
        p = tree.arity
    check_arity(p)
    check_tree(tree, p)
    return p


def parse_tree(text):
    text = text.strip()

    def parse(pos):
        if text.startswith(LEAF_SYMBOL, pos):
            return LEAF, pos + len(LEAF_SYMBOL)
        if pos < len(text) and text[pos] == "(":
            children = []
            pos += 1
            while pos < len(text) and text[pos] != ")":
                child, pos = parse(pos)
                children.append(child)
            if pos >= len(text) or not children:
                raise ValueError('Malformed tree "{}"'.format(text))
            return PAryTree(tuple(children)), pos + 1
        raise ValueError(
            'Unexpected character at {} in tree "{}"'.format(pos, text)
        )

    tree, end = parse(0)
    if end != len(text):
        raise ValueError('Trailing characters in tree "{}"'.format(text))
    return tree


def postorder(tree):
    for child in tree.children:
        yield from postorder(child)
    yield tree


def last_right_string(tree):
    """
    Internal nodes reached from the root by always taking the last child.
    """
    chain = []
    while not tree.is_leaf:
        chain.append(tree)
        tree = tree.children[-1]
    return chain


def _trees(p, n, memo):
    """
    Trees with n internal nodes. The child sizes (s_1..s_p) sum to n - 1,
    so the first p - 1 of them are the simplex keys of layer n.
    """
    if n not in memo:
        if n == 0:
            memo[n] = (LEAF,)
        else:
            trees = []
            for head in simplex_keys(p, n):
                sizes = head + (n - 1 - sum(head),)
                for children in product(*(_trees(p, size, memo) for size in sizes)):
                    trees.append(PAryTree(children))
            memo[n] = tuple(trees)
    return memo[n]


def enumerate_trees(p, n, limit=None):
    """
    Every p-ary tree with n internal nodes, each once.

    :return: List[PAryTree]
    """
    check_arity(p)
    if n < 0:
        raise ValueError("Number of internal nodes must be >= 0, got {}".format(n))
    check_resource("trees", fuss_catalan(p, n), enumeration_limit(limit))
    return list(_trees(p, n, {}))


def tree_to_path(tree, p=None):
    """
    Postorder search: every leaf but the left-most one gives an up step,
    every internal node a down step.

    :return: LatticePath
    """
    p = _resolve_arity(tree, p)
    steps = [
        UP if visited.is_leaf else DOWN for visited in postorder(tree)
    ]
    return LatticePath(p, "".join(steps[1:]))


def path_to_tree(path):
    """
    Stack reconstruction: start from one leaf, push a leaf per up step, and
    on a down step replace the top p nodes by an internal node having them
    as children, in order.
    """
    check_valid(path)
    p = path.p
    stack = [LEAF]
    for step in path.steps:
        if step == UP:
            stack.append(LEAF)
        else:
            children = tuple(stack[-p:])
            del stack[-p:]
            stack.append(PAryTree(children))
    assert len(stack) == 1
    return stack[0]


def tree_stats(tree, p=None):
    """
    Internal nodes off the last right string, grouped by the number of
    leaves met before them in the search (the left-most leaf excluded),
    taken modulo p-1. Agrees with path_stats(tree_to_path(tree)).

    :return: PathStats
    """
    p = _resolve_arity(tree, p)
    if tree.is_leaf:
        return PathStats(0, 0, (0,) * (p - 1))
    residues = []
    leaves_seen = -1
    for visited in postorder(tree):
        if visited.is_leaf:
            leaves_seen += 1
        else:
            residues.append(leaves_seen % (p - 1))
    last_run = len(last_right_string(tree))
    ks = [0] * (p - 1)
    for residue in residues[: len(residues) - last_run]:
        ks[residue] += 1
    return PathStats(len(residues), last_run, tuple(ks))


def last_right_string_involution(tree):
    """
    Exchange the left and middle sons of every node of the last right
    string of a ternary tree. Swaps the two statistics.
    """
    if tree.is_leaf:
        return tree
    if tree.arity != 3:
        raise ValueError(
            "The involution is defined on ternary trees, got arity {}".format(
                tree.arity
            )
        )
    check_tree(tree, 3)
    left, middle, right = tree.children
    return PAryTree((middle, left, last_right_string_involution(right)))
