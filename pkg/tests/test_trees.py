import pytest

from qspec.graph import GraphError, is_connected, is_tree
from qspec.trees import free_trees, level_sequences, tree_from_levels

# number of free trees on n vertices
KNOWN = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106,
         11: 235, 12: 551, 13: 1301, 14: 3159, 15: 7741}


@pytest.mark.parametrize("n", sorted(KNOWN))
def test_counts(n):
    trees = list(free_trees(n))
    assert len(trees) == KNOWN[n]
    assert all(is_tree(t) and t.n == n for t in trees)


def test_levels_to_tree():
    t = tree_from_levels([0, 1, 2, 1, 2])
    assert t.sorted_edges() == [(0, 1), (0, 3), (1, 2), (3, 4)]
    assert is_connected(t)


def test_first_sequence_is_path():
    seq = next(level_sequences(7))
    assert seq == [0, 1, 2, 3, 1, 2, 3]


@pytest.mark.parametrize("n", [0, 21])
def test_range(n):
    with pytest.raises(GraphError):
        list(free_trees(n))
