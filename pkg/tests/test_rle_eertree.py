"""Test the rle_eertree module."""

import pytest
from hypothesis import given, settings

from .conftest import EXAMPLE_TEXT, rle_strings


def _palindrome_of(tree, node_id):
    """Spell out a node's palindrome as a list of runs, innermost first."""

    layers = []
    while tree.nodes[node_id].parent is not None:
        layers.append(tuple(tree.nodes[node_id].label))
        node_id = tree.nodes[node_id].parent
    layers.reverse()
    return tuple(layers)


def _node_map(tree):
    return {_palindrome_of(tree, v): tree.nodes[v] for v in tree.non_root_nodes()}


def _spell(tree, node_id):
    """Decompress a node's palindrome into a list of symbols."""

    (symbol, exponent), *outer = _palindrome_of(tree, node_id)
    spelled = [symbol] * exponent
    for symbol, exponent in outer:
        spelled = [symbol] * exponent + spelled + [symbol] * exponent
    return spelled


def _build_tree(rle):
    from rle_sups.rle_eertree import build_rle_eertree
    from rle_sups.rle_manacher import build_max_pal_table

    return build_rle_eertree(rle, build_max_pal_table(rle))


def test_build_bounded_tree(fixture_example_rle):
    """Test the step one tree holds the RLE-bounded palindromes with counts."""
    from rle_sups.rle_eertree import build_bounded_tree, propagate_counts

    tree = propagate_counts(build_bounded_tree(fixture_example_rle))
    nodes = _node_map(tree)

    assert {key: node.count for key, node in nodes.items()} == {
        (("b", 3),): 2,
        (("a", 2),): 1,
        (("b", 2),): 3,
        (("a", 1),): 1,
        (("a", 3),): 2,
        (("a", 1), ("b", 2)): 1,
        (("a", 3), ("b", 2)): 1,
        (("b", 2), ("a", 3)): 1,
    }
    assert all(node.rle_bounded and not node.maximal for node in nodes.values())


def test_build_rle_eertree(fixture_example_rle):
    """Test the complete tree including maximal-only nodes."""
    tree = _build_tree(fixture_example_rle)
    nodes = _node_map(tree)

    assert tree.size == 14

    # Maximal-only nodes have no suffix link
    maximal_only = {
        key: (node.count, node.sample_center_run)
        for key, node in nodes.items()
        if not node.rle_bounded
    }
    assert maximal_only == {
        (("a", 2), ("b", 2)): (1, 2),
        (("b", 2), ("a", 1)): (2, 5),
        (("a", 1), ("b", 2), ("a", 2)): (1, 4),
        (("a", 3), ("b", 2), ("a", 1)): (1, 6),
        (("b", 2), ("a", 3), ("b", 2)): (1, 7),
    }
    assert all(
        nodes[key].suffix_link is None and nodes[key].maximal for key in maximal_only
    )

    # An RLE-bounded node that is also a maximal palindrome elsewhere
    shared = nodes[(("a", 3), ("b", 2))]
    assert shared.rle_bounded and shared.maximal
    assert shared.count == 2
    assert shared.char_len == 7
    assert shared.sample_center_run == 8


def test_build_rle_eertree_edges_sorted(fixture_example_rle):
    """Test that out-going edges are sorted by symbol then exponent."""
    tree = _build_tree(fixture_example_rle)

    for node in tree.nodes:
        labels = list(node.edges)
        assert labels == sorted(labels)


@pytest.mark.parametrize(
    argnames="palindrome, expected",
    argvalues=[
        pytest.param((("b", 2),), 7, id="single_run_b2"),
        pytest.param((("b", 3),), 2, id="single_run_b3"),
        pytest.param((("a", 1),), 9, id="single_run_a1"),
        pytest.param((("a", 1), ("b", 2)), 1, id="composite_unique"),
        pytest.param((("b", 2), ("a", 1)), 3, id="composite_with_longer_sibling"),
        pytest.param((("a", 3), ("b", 2)), 2, id="composite_two_occurrences"),
    ],
)
def test_substring_occurrences(fixture_example_rle, palindrome, expected):
    """Test occurrence counts against counting in the decompressed text."""
    from rle_sups.oracle import oracle_occurrences
    from rle_sups.rle_eertree import substring_occurrences

    tree = _build_tree(fixture_example_rle)
    node_id = next(
        v for v in tree.non_root_nodes() if _palindrome_of(tree, v) == palindrome
    )

    centre, *layers = palindrome
    spelled = centre[0] * centre[1]
    for symbol, exponent in layers:
        spelled = symbol * exponent + spelled + symbol * exponent

    assert substring_occurrences(tree, fixture_example_rle, node_id) == expected
    assert oracle_occurrences(EXAMPLE_TEXT, spelled) == expected


def test_substring_occurrences_root(fixture_example_rle):
    """Test that the roots have no occurrence count."""
    from rle_sups.rle_eertree import (
        ROOT_EMPTY,
        ROOT_IMAGINARY,
        substring_occurrences,
    )

    tree = _build_tree(fixture_example_rle)

    for root in (ROOT_IMAGINARY, ROOT_EMPTY):
        with pytest.raises(ValueError):
            substring_occurrences(tree, fixture_example_rle, root)


@given(rle=rle_strings(max_runs=11))
@settings(max_examples=100, deadline=None)
def test_tree_size_bound_random(rle):
    """Test the tree size bounds and occurrence counts on random strings."""
    from rle_sups.oracle import oracle_occurrences
    from rle_sups.rle_eertree import substring_occurrences

    tree = _build_tree(rle)
    text = rle.decode()

    assert tree.size <= 2 * rle.m + 1
    assert sum(tree.nodes[v].rle_bounded for v in tree.non_root_nodes()) <= rle.m
    for node_id in tree.non_root_nodes():
        spelled = _spell(tree, node_id)
        assert tree.nodes[node_id].char_len == len(spelled)
        assert substring_occurrences(tree, rle, node_id) == oracle_occurrences(
            text, spelled
        )


@given(rle=rle_strings(max_runs=11))
@settings(max_examples=100, deadline=None)
def test_node_flags_random(rle):
    """Test the occurrences behind the RLE-bounded and maximal flags."""

    tree = _build_tree(rle)
    text = rle.decode()
    begins = [rle.run_begin(j) for j in range(1, rle.m + 1)]
    ends = {rle.run_end(j) for j in range(1, rle.m + 1)}

    for node_id in tree.non_root_nodes():
        node = tree.nodes[node_id]
        spelled = _spell(tree, node_id)
        length = len(spelled)

        if node.rle_bounded:
            assert any(
                beg + length - 1 in ends and text[beg - 1 : beg - 1 + length] == spelled
                for beg in begins
            )

        if node.maximal:
            centre = rle.run_center_doubled(node.sample_center_run)
            beg = (centre - length + 1) // 2
            end = beg + length - 1
            assert text[beg - 1 : end] == spelled
            assert beg == 1 or end == rle.n or text[beg - 2] != text[end]


def test_dump_tree():
    """Test the debug dump of a small tree."""
    from rle_sups.rle_core import encode_plain
    from rle_sups.rle_eertree import build_rle_eertree, dump_tree
    from rle_sups.rle_manacher import build_max_pal_table

    rle = encode_plain("aba")
    tree = build_rle_eertree(rle, build_max_pal_table(rle))

    assert dump_tree(tree).splitlines() == [
        "0 len=0 runs=-1 cnt=0 ctr=0 flags=-",
        "1 len=0 runs=0 cnt=0 ctr=0 flags=-",
        "2 len=1 runs=1 cnt=2 ctr=1 flags=RB",
        "3 len=1 runs=1 cnt=1 ctr=2 flags=RB",
        "4 len=3 runs=3 cnt=1 ctr=2 flags=RB",
        "0 -(a,1)-> 2",
        "0 -(b,1)-> 3",
        "3 -(a,1)-> 4",
    ]
