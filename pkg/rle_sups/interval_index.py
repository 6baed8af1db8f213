"""Predecessor, successor and range-minimum queries over the sorted MUPS arrays.

Ranks are 1-based, matching positions: ``pred`` returns 0 and ``succ`` returns ``d +
1`` when no element qualifies.
"""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray


@dataclass(frozen=True, eq=False)
class SortedPositionIndex:
    """A strictly increasing array of positions."""

    values: NDArray[np.int64]

    @property
    def d(self) -> int:
        """The number of positions."""
        return len(self.values)


def pred(index: SortedPositionIndex, k: int) -> int:
    """Rank of the largest value that is at most ``k``, or 0.

    Examples:
        >>> ends = SortedPositionIndex(np.array([6, 9, 16, 17]))
        >>> pred(ends, 7), pred(ends, 17), pred(ends, 5)
        (1, 4, 0)
    """
    return int(np.searchsorted(index.values, k, side="right"))


def succ(index: SortedPositionIndex, k: int) -> int:
    """Rank of the smallest value that is at least ``k``, or ``d + 1``."""
    return int(np.searchsorted(index.values, k, side="left")) + 1


@dataclass(frozen=True, eq=False)
class RmqIndex:
    """Sparse table of leftmost range-minimum positions.

    Level ``k`` holds, for every start ``i``, the 0-based position of the leftmost
    minimum of ``base[i : i + 2**k]``.
    """

    base: NDArray[np.int64]
    table: tuple[NDArray[np.int64], ...]

    @property
    def nbytes(self) -> int:
        """Bytes held by the base array and the sparse table."""
        return self.base.nbytes + sum(level.nbytes for level in self.table)


def build_rmq(base: NDArray[np.int64]) -> RmqIndex:
    """Precompute the sparse table for ``base``."""

    d = len(base)
    if d == 0:
        return RmqIndex(base=base, table=())

    table = [np.arange(d, dtype=np.int64)]
    span = 1
    while 2 * span <= d:
        previous = table[-1]
        starts = d - 2 * span + 1
        left = previous[:starts]
        right = previous[span : span + starts]
        table.append(np.where(base[right] < base[left], right, left))
        span *= 2

    return RmqIndex(base=base, table=tuple(table))


def _argmin(rmq: RmqIndex, lo: int, hi: int) -> int:
    """Leftmost minimum position in the 0-based inclusive range ``[lo, hi]``."""

    level = (hi - lo + 1).bit_length() - 1
    left = int(rmq.table[level][lo])
    right = int(rmq.table[level][hi - (1 << level) + 1])
    return right if rmq.base[right] < rmq.base[left] else left


def range_min(rmq: RmqIndex, lo: int, hi: int) -> int:
    """Rank of the leftmost minimum of ``base`` over ranks ``[lo, hi]``."""

    if not 1 <= lo <= hi <= len(rmq.base):
        raise IndexError(f"Rank range [{lo},{hi}] is empty or out of bounds")
    return _argmin(rmq, lo - 1, hi - 1) + 1


def range_min_all(rmq: RmqIndex, lo: int, hi: int) -> tuple[int | None, list[int]]:
    """Report the minimum over ranks ``[lo, hi]`` and every rank attaining it.

    Each reported rank splits its range in two and both halves are queried again, so
    the number of range queries is proportional to the number of ranks reported.

    Args:
        rmq: The range minimum index.
        lo: First rank of the range.
        hi: Last rank of the range.

    Returns:
        The minimum value and its ranks in increasing order. An empty range gives
        ``(None, [])``.

    Examples:
        >>> rmq = build_rmq(np.array([5, 5, 5]))
        >>> range_min_all(rmq, 1, 3)
        (5, [1, 2, 3])
    """

    lo, hi = max(lo, 1), min(hi, len(rmq.base))
    if lo > hi:
        return None, []

    minimum = int(rmq.base[_argmin(rmq, lo - 1, hi - 1)])
    ranks = []
    pending = [(lo - 1, hi - 1)]
    while pending:
        start, stop = pending.pop()
        if start > stop:
            continue
        position = _argmin(rmq, start, stop)
        if rmq.base[position] != minimum:
            continue
        ranks.append(position + 1)
        pending.append((start, position - 1))
        pending.append((position + 1, stop))

    return minimum, sorted(ranks)
