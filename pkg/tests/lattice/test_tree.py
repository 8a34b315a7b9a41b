import unittest
from collections import Counter

from fusscat.exact import fuss_catalan
from fusscat.lattice import (
    LEAF,
    enumerate_paths,
    enumerate_trees,
    last_right_string,
    last_right_string_involution,
    node,
    parse_path,
    parse_tree,
    path_stats,
    path_to_tree,
    tree_stats,
    tree_to_path,
)
from fusscat.simplex import build_simplex


class TestTrees(unittest.TestCase):
    def test_counts(self):
        assert len(enumerate_trees(3, 2)) == 3
        assert len(enumerate_trees(2, 4)) == 14
        assert len(enumerate_trees(5, 1)) == 1
        for p in range(2, 5):
            for n in range(7):
                trees = enumerate_trees(p, n)
                assert len(trees) == fuss_catalan(p, n)
                assert len(set(trees)) == len(trees)

    def test_high_arity(self):
        trees = enumerate_trees(6, 3)
        assert len(trees) == fuss_catalan(6, 3) == 51
        assert len(set(trees)) == 51
        assert all(tree.nb_internal == 3 for tree in trees)
        assert enumerate_trees(6, 3) == trees

    def test_shape(self):
        for tree in enumerate_trees(3, 4):
            assert tree.nb_internal == 4
            assert tree.nb_leaves == 2 * 4 + 1

    def test_text_format(self):
        tree = node(node(LEAF, LEAF, LEAF), LEAF, LEAF)
        assert str(tree) == "((•••)••)"
        assert parse_tree("((•••)••)") == tree
        for tree in enumerate_trees(4, 3):
            assert parse_tree(str(tree)) == tree

    def test_parse_errors(self):
        for text in ("(••", "()", "(•••)x", "x"):
            with self.assertRaises(ValueError):
                parse_tree(text)


class TestBijection(unittest.TestCase):
    def test_examples(self):
        assert tree_to_path(node(LEAF, LEAF, LEAF)).steps == "UUD"
        assert tree_to_path(node(LEAF, LEAF, LEAF, LEAF)).steps == "UUUD"
        assert tree_to_path(node(node(LEAF, LEAF), LEAF)).steps == "UDUD"
        assert tree_to_path(node(LEAF, node(LEAF, LEAF))).steps == "UUDD"
        assert path_to_tree(parse_path(3, "UUDUUD")) == node(
            node(LEAF, LEAF, LEAF), LEAF, LEAF
        )
        assert path_to_tree(parse_path(4, "UUUD")) == node(LEAF, LEAF, LEAF, LEAF)

    def test_round_trips(self):
        for p in range(2, 5):
            for n in range(1, 7):
                trees = enumerate_trees(p, n)
                images = [tree_to_path(tree, p) for tree in trees]
                assert len(set(images)) == len(trees)
                assert set(images) == set(enumerate_paths(p, n))
                for tree, path in zip(trees, images):
                    assert path_to_tree(path) == tree
                    assert tree_to_path(path_to_tree(path), p) == path

    def test_leaf_needs_arity(self):
        with self.assertRaises(ValueError):
            tree_to_path(LEAF)
        assert tree_to_path(LEAF, 3).steps == ""

    def test_wrong_arity(self):
        with self.assertRaises(ValueError):
            tree_to_path(node(node(LEAF, LEAF), LEAF, LEAF))
        with self.assertRaises(ValueError):
            tree_to_path(node(LEAF, LEAF), 3)

    def test_invalid_path(self):
        with self.assertRaises(ValueError):
            path_to_tree(parse_path(3, "UDU"))


class TestTreeStatistics(unittest.TestCase):
    def test_single_node(self):
        stats = tree_stats(node(LEAF, LEAF, LEAF))
        assert (stats.n, stats.last_run, stats.ks) == (1, 1, (0, 0))

    def test_matches_path_statistics(self):
        for p, n_max in ((2, 6), (3, 6), (4, 5)):
            for n in range(1, n_max + 1):
                for tree in enumerate_trees(p, n):
                    assert tree_stats(tree, p) == path_stats(tree_to_path(tree, p))

    def test_last_run_is_right_string(self):
        for tree in enumerate_trees(3, 5):
            stats = path_stats(tree_to_path(tree))
            assert stats.last_run == len(last_right_string(tree))

    def test_class_sizes(self):
        tetrahedron = build_simplex(3, 6)
        for n in range(1, 7):
            sizes = Counter(tree_stats(tree).ks for tree in enumerate_trees(3, n))
            assert sizes == {ks: v for ks, v in tetrahedron.layer(n).items()}


class TestInvolution(unittest.TestCase):
    def test_single_node_fixed(self):
        tree = node(LEAF, LEAF, LEAF)
        assert last_right_string_involution(tree) == tree

    def test_involution(self):
        for n in range(1, 7):
            for tree in enumerate_trees(3, n):
                image = last_right_string_involution(tree)
                assert last_right_string_involution(image) == tree
                assert tree_stats(image).ks == tree_stats(tree).ks[::-1]

    def test_swaps_classes(self):
        trees = enumerate_trees(3, 5)
        source = [t for t in trees if tree_stats(t).ks == (1, 2)]
        images = {last_right_string_involution(t) for t in source}
        assert len(source) == len(images) == 30
        assert all(tree_stats(t).ks == (2, 1) for t in images)

    def test_wrong_arity(self):
        with self.assertRaises(ValueError):
            last_right_string_involution(node(LEAF, LEAF))


if __name__ == "__main__":
    unittest.main(verbosity=1)
