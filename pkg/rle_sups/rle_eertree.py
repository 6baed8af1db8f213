"""The RLE-eertree: a palindromic tree over the run alphabet.

Each non-root node is a distinct run-centred palindrome of the decompressed string
that either has an RLE-bounded occurrence (both ends on run boundaries) or occurs as a
maximal palindrome. Nodes record how many such occurrences they have, and one sample
occurrence given by its centre run.

The tree is built in two steps:

1. The ordinary online palindromic tree is built over the run sequence, treating each
   run as one character. This yields every palindrome with an RLE-bounded occurrence,
   and the usual suffix-link propagation turns the per-position hits into occurrence
   counts.
2. Every RLE-maximal palindrome whose flanking runs share a symbol is extended by the
   shorter flank, and the result is recorded as a child of the RLE-maximal node. These
   are the maximal palindromes that are not RLE-bounded. The RLE-maximal node is found
   on the suffix-link chain of the longest palindromic suffix ending at its last run,
   using binary lifting over the suffix links.
"""

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from rle_sups import LOGGER, IndexInvariantError
from rle_sups.rle_core import RleString, Run
from rle_sups.rle_manacher import MaxPalTable

ROOT_IMAGINARY = 0
"""Node id of the root of length -1 (in runs): the parent of all single-run nodes."""

ROOT_EMPTY = 1
"""Node id of the root representing the empty palindrome."""


@dataclass(slots=True)
class PalNode:
    """A node of the RLE-eertree."""

    char_len: int
    """Decompressed length of the palindrome."""
    run_len: int
    """Number of runs in the palindrome: -1 and 0 for the two roots."""
    suffix_link: int | None
    """Longest proper palindromic suffix, in runs. None for maximal-only nodes."""
    parent: int | None = None
    label: Run | None = None
    """The run added on both sides of the parent to form this node."""
    edges: dict[Run, int] = field(default_factory=dict)
    count: int = 0
    """Number of RLE-bounded or maximal occurrences."""
    sample_center_run: int = 0
    """Centre run of one occurrence, a maximal one for maximal nodes."""
    rle_bounded: bool = False
    maximal: bool = False


@dataclass
class RleEertree:
    """The RLE-eertree of a run-length encoded string."""

    nodes: list[PalNode]
    longest_suffix: list[int]
    """Node of the longest palindromic suffix of runs ``1..j``, at index ``j - 1``."""

    @property
    def size(self) -> int:
        """Number of nodes, counting the empty root but not the imaginary one."""
        return len(self.nodes) - 1

    def non_root_nodes(self) -> range:
        """The ids of all non-root nodes."""
        return range(ROOT_EMPTY + 1, len(self.nodes))


def _suffix_parent(
    nodes: list[PalNode], runs: tuple[Run, ...], node: int, pos: int
) -> int:
    """Walk suffix links from ``node`` to the first palindrome that ``runs[pos]`` wraps.

    The imaginary root always qualifies, which terminates the walk.
    """

    run = runs[pos]
    while True:
        before = pos - 1 - nodes[node].run_len
        if before >= 0 and runs[before] == run:
            return node
        link = nodes[node].suffix_link
        assert link is not None
        node = link


def build_bounded_tree(rle: RleString) -> RleEertree:
    """Build the palindromic tree of the run sequence.

    Every node created records the occurrence that created it as its sample, and every
    run position adds one hit to the node of its longest palindromic suffix. Call
    :func:`propagate_counts` to turn the hits into occurrence counts.

    Args:
        rle: The run-length encoded string.
    """

    runs = rle.runs
    nodes = [
        PalNode(char_len=0, run_len=-1, suffix_link=ROOT_IMAGINARY),
        PalNode(char_len=0, run_len=0, suffix_link=ROOT_IMAGINARY),
    ]
    longest_suffix: list[int] = []
    last = ROOT_EMPTY

    for pos, run in enumerate(runs):
        parent = _suffix_parent(nodes, runs, last, pos)
        child = nodes[parent].edges.get(run)

        if child is None:
            parent_node = nodes[parent]
            if parent_node.run_len == -1:
                link = ROOT_EMPTY
                char_len = run.exponent
            else:
                assert parent_node.suffix_link is not None
                link_parent = _suffix_parent(nodes, runs, parent_node.suffix_link, pos)
                link = nodes[link_parent].edges[run]
                char_len = parent_node.char_len + 2 * run.exponent

            run_len = parent_node.run_len + 2
            child = len(nodes)
            nodes.append(
                PalNode(
                    char_len=char_len,
                    run_len=run_len,
                    suffix_link=link,
                    parent=parent,
                    label=run,
                    sample_center_run=pos + 1 - (run_len - 1) // 2,
                    rle_bounded=True,
                )
            )
            parent_node.edges[run] = child

        nodes[child].count += 1
        longest_suffix.append(child)
        last = child

    return RleEertree(nodes=nodes, longest_suffix=longest_suffix)


def propagate_counts(tree: RleEertree) -> RleEertree:
    """Push occurrence hits down the suffix links, longest palindromes first.

    Every RLE-bounded occurrence is a palindromic suffix of some run prefix, so after
    propagation each node counts all of its RLE-bounded occurrences.
    """

    nodes = tree.nodes
    by_length = sorted(
        tree.non_root_nodes(), key=lambda v: nodes[v].run_len, reverse=True
    )
    for node in by_length:
        link = nodes[node].suffix_link
        if link is not None and link > ROOT_EMPTY:
            nodes[link].count += nodes[node].count

    return tree


def _suffix_link_lifting(tree: RleEertree) -> NDArray[np.int64]:
    """Binary lifting table over the suffix links.

    Row ``k`` holds the ``2**k``-th suffix-link ancestor of every node. The imaginary
    root is its own ancestor.
    """

    links = np.fromiter(
        (node.suffix_link for node in tree.nodes), dtype=np.int64, count=len(tree.nodes)
    )
    levels = max(1, len(tree.nodes).bit_length())
    lifting = np.empty((levels, len(links)), dtype=np.int64)
    lifting[0] = links
    for level in range(1, levels):
        lifting[level] = lifting[level - 1][lifting[level - 1]]
    return lifting


def _locate_suffix(
    lifting: NDArray[np.int64], run_lens: NDArray[np.int64], node: int, run_len: int
) -> int:
    """Find the suffix-link ancestor of ``node`` with exactly ``run_len`` runs."""

    for level in range(lifting.shape[0] - 1, -1, -1):
        ancestor = int(lifting[level, node])
        if run_lens[ancestor] >= run_len:
            node = ancestor

    if run_lens[node] != run_len:
        raise IndexInvariantError(
            f"No palindromic suffix of {run_len} runs "
            f"on the suffix chain of node {node}"
        )
    return node


def add_maximal_nodes(
    rle: RleString, max_pal: MaxPalTable, tree: RleEertree
) -> RleEertree:
    """Record the maximal palindromes that extend an RLE-maximal palindrome.

    For each run ``l`` whose RLE-maximal palindrome spans runs ``[i, j]`` and whose
    flanking runs ``i - 1`` and ``j + 1`` share a symbol, the child of the RLE-maximal
    node labelled with that symbol and the smaller flanking exponent gains one
    occurrence (and is created if needed), and its sample becomes this maximal
    occurrence. The counts added here are not propagated: the inner layers of a
    maximal occurrence were already counted as RLE-bounded.

    Args:
        rle: The run-length encoded string.
        max_pal: The palindrome table of ``rle``.
        tree: A tree from :func:`build_bounded_tree` with counts propagated.
    """

    runs = rle.runs
    m = rle.m
    nodes = tree.nodes
    lifting = _suffix_link_lifting(tree)
    run_lens = np.fromiter(
        (node.run_len for node in nodes), dtype=np.int64, count=len(nodes)
    )

    for centre, radius in enumerate(max_pal.rle_radius.tolist()):
        lo, hi = centre - radius, centre + radius
        if lo == 0 or hi == m - 1:
            continue

        left, right = runs[lo - 1], runs[hi + 1]
        if left.symbol != right.symbol:
            continue

        core = _locate_suffix(
            lifting, run_lens, tree.longest_suffix[hi], 2 * radius + 1
        )
        label = Run(left.symbol, min(left.exponent, right.exponent))
        child = nodes[core].edges.get(label)

        if child is None:
            child = len(nodes)
            nodes.append(
                PalNode(
                    char_len=nodes[core].char_len + 2 * label.exponent,
                    run_len=nodes[core].run_len + 2,
                    suffix_link=None,
                    parent=core,
                    label=label,
                )
            )
            nodes[core].edges[label] = child

        nodes[child].count += 1
        nodes[child].sample_center_run = centre + 1
        nodes[child].maximal = True

    return tree


def build_rle_eertree(rle: RleString, max_pal: MaxPalTable) -> RleEertree:
    """Build the complete RLE-eertree with sorted out-going edges.

    Args:
        rle: The run-length encoded string.
        max_pal: The palindrome table of ``rle``.
    """

    tree = propagate_counts(build_bounded_tree(rle))
    bounded = len(tree.nodes)
    tree = add_maximal_nodes(rle, max_pal, tree)

    for node in tree.nodes:
        if len(node.edges) > 1:
            node.edges = dict(sorted(node.edges.items()))

    LOGGER.debug(
        f"RLE-eertree: {bounded - 2} RLE-bounded and "
        f"{len(tree.nodes) - bounded} maximal-only nodes over {rle.m} runs"
    )
    return tree


def substring_occurrences(tree: RleEertree, rle: RleString, node: int) -> int:
    """Count the occurrences of a node's palindrome as a substring of the text.

    A single-run palindrome ``c^g`` occurs ``f - g + 1`` times in every run ``c^f``
    with ``f >= g``. A palindrome ``c^g P c^g`` occurs once for every occurrence
    of ``P`` flanked by runs of ``c`` that are both at least ``g`` long, which is the
    sum of the counts of the siblings ``c^f P c^f`` with ``f >= g``.

    Args:
        tree: A fully built RLE-eertree.
        rle: The string the tree was built from.
        node: A non-root node id.

    Raises:
        ValueError: if ``node`` is a root.
    """

    pal = tree.nodes[node]
    if pal.parent is None or pal.label is None:
        raise ValueError("Substring occurrences are not defined for a root node")

    symbol, exponent = pal.label
    if pal.run_len == 1:
        ordered, suffix_sums = rle.exponent_profile[symbol]
        first = int(np.searchsorted(ordered, exponent, side="left"))
        covering = len(ordered) - first
        if covering == 0:
            return 0
        return int(suffix_sums[first]) - (exponent - 1) * covering

    return sum(
        tree.nodes[sibling].count
        for label, sibling in tree.nodes[pal.parent].edges.items()
        if label.symbol == symbol and label.exponent >= exponent
    )


def dump_tree(tree: RleEertree) -> str:
    """Render the tree in the line-oriented debug format.

    One line per node, ``<id> len=<char_len> runs=<run_len> cnt=<count>
    ctr=<sample_center_run> flags=<RB|MX>``, followed by one line per edge,
    ``<parent> -(<sym>,<exp>)-> <child>``.
    """

    lines = []
    for node_id, node in enumerate(tree.nodes):
        flags = "|".join(
            flag
            for flag, present in (("RB", node.rle_bounded), ("MX", node.maximal))
            if present
        )
        lines.append(
            f"{node_id} len={node.char_len} runs={node.run_len} cnt={node.count} "
            f"ctr={node.sample_center_run} flags={flags or '-'}"
        )
    for node_id, node in enumerate(tree.nodes):
        for (symbol, exponent), child in node.edges.items():
            lines.append(f"{node_id} -({symbol},{exponent})-> {child}")
    return "\n".join(lines)
