"""Maximal palindromes of a run-length encoded string.

Manacher's algorithm is run over the run sequence, treating each ``(symbol,
exponent)`` pair as one character. This gives the RLE-maximal palindrome centred on
every run. Each of these is then extended by the common part of its two flanking runs
when those runs share a symbol, giving the maximal palindrome of the decompressed string
centred on each run.

Only odd centres of the run sequence are examined: a palindrome of the run sequence
centred between two runs would have to start with two equal adjacent runs, which a
canonical encoding never contains.
"""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from rle_sups.rle_core import RleString


@dataclass(frozen=True, eq=False)
class MaxPalTable:
    """Run-centred palindrome lengths, indexed by ``run index - 1``."""

    rle_radius: NDArray[np.int64]
    """The RLE-maximal palindrome centred on run j spans runs ``[j - r, j + r]``."""
    max_len: NDArray[np.int64]
    """Decompressed length of the maximal palindrome centred on run j."""


def rle_maximal_palindromes(rle: RleString) -> NDArray[np.int64]:
    """Compute the RLE-maximal palindrome radius for every run.

    Args:
        rle: The run-length encoded string.

    Returns:
        An array holding, for each run, the number of runs the palindrome extends to
        either side of the centre run.
    """

    runs = rle.runs
    m = len(runs)
    radius = [0] * m

    # [left, right] is the rightmost palindrome found so far
    left, right = 0, -1
    for centre in range(m):
        if centre > right:
            k = 0
        else:
            k = min(radius[left + right - centre], right - centre)

        while (
            centre - k - 1 >= 0
            and centre + k + 1 < m
            and runs[centre - k - 1] == runs[centre + k + 1]
        ):
            k += 1

        radius[centre] = k
        if centre + k > right:
            left, right = centre - k, centre + k

    return np.asarray(radius, dtype=np.int64)


def extend_to_maximal(
    rle: RleString, rle_radius: NDArray[np.int64]
) -> NDArray[np.int64]:
    """Extend RLE-maximal palindromes to maximal palindromes.

    A palindrome spanning runs ``[i, j]`` can only grow further in the decompressed
    string if runs ``i - 1`` and ``j + 1`` both exist and share a symbol, in which case
    it grows by the shorter of the two on each side and then stops.

    Args:
        rle: The run-length encoded string.
        rle_radius: The output of :func:`rle_maximal_palindromes` for ``rle``.
    """

    m = rle.m
    runs = rle.runs
    centres = np.arange(m, dtype=np.int64)
    lo = centres - rle_radius
    hi = centres + rle_radius

    begins = rle.run_ends - rle.exponents + 1
    lengths = rle.run_ends[hi] - begins[lo] + 1

    extension = np.zeros(m, dtype=np.int64)
    for centre in np.flatnonzero((lo > 0) & (hi < m - 1)):
        left, right = runs[lo[centre] - 1], runs[hi[centre] + 1]
        if left.symbol == right.symbol:
            extension[centre] = min(left.exponent, right.exponent)

    return lengths + 2 * extension


def build_max_pal_table(rle: RleString) -> MaxPalTable:
    """Compute both the RLE-maximal radii and maximal lengths for ``rle``.

    Examples:
        >>> from rle_sups.rle_core import encode_plain
        >>> table = build_max_pal_table(encode_plain("caabbcccbbaaaac"))
        >>> table.rle_radius.tolist()
        [0, 0, 0, 1, 0, 0, 0]
        >>> table.max_len.tolist()
        [1, 2, 2, 11, 2, 4, 1]
    """

    rle_radius = rle_maximal_palindromes(rle)
    max_len = extend_to_maximal(rle, rle_radius)
    return MaxPalTable(rle_radius=rle_radius, max_len=max_len)


def maximal_palindrome_at(
    rle: RleString, max_pal: MaxPalTable, doubled_center: int
) -> tuple[int, int]:
    """Find the maximal palindrome of the decompressed string at any centre.

    Centres that are not run centres lie inside a single run (or on the boundary
    between two runs) and their maximal palindrome is a block of that run's symbol
    reaching the nearer run boundary. An empty palindrome is returned as ``(b, b -
    1)``.

    Args:
        rle: The run-length encoded string.
        max_pal: The palindrome table of ``rle``.
        doubled_center: Twice the centre, between 2 and ``2 * rle.n``.

    Returns:
        The inclusive begin and end positions of the maximal palindrome.
    """

    if not 2 <= doubled_center <= 2 * rle.n:
        raise IndexError(f"Centre {doubled_center / 2} out of range [1,{rle.n}]")

    left = doubled_center // 2
    right = doubled_center - left
    run = rle.run_of_position(left)
    if run != rle.run_of_position(right):
        return right, left

    if doubled_center == rle.run_center_doubled(run):
        length = int(max_pal.max_len[run - 1])
        begin = (doubled_center - length + 1) // 2
        return begin, begin + length - 1

    begin = max(rle.run_begin(run), doubled_center - rle.run_end(run))
    return begin, doubled_center - begin
