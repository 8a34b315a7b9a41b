from .path import (
    UP,
    DOWN,
    LatticePath,
    PathStats,
    parse_path,
    is_valid,
    iter_paths,
    enumerate_paths,
    path_stats,
    distribution,
    truncate_path,
    extend_path,
    binary_truncate,
)
from .tree import (
    PAryTree,
    LEAF,
    node,
    parse_tree,
    enumerate_trees,
    tree_to_path,
    path_to_tree,
    tree_stats,
    last_right_string,
    last_right_string_involution,
)
from .cycle import (
    even_cyclic_shifts,
    good_shift_fraction,
    expected_good_fraction,
    is_good_shift,
    random_class_word,
    word_class,
)
