"""Shortest unique palindromic substring (SUPS) queries.

Every SUPS for an interval ``[s, t]`` contains exactly one MUPS and shares its centre.
A query therefore counts the MUPSs that lie inside ``[s, t]``:

* two or more: no unique palindrome covering ``[s, t]`` can be minimal, so there is no
  SUPS;
* exactly one, ``[i, j]``: the only candidate is that MUPS extended symmetrically to
  cover ``[s, t]``;
* none: the candidates are the last MUPS ending before ``t`` extended to the right up
  to ``t``, the first MUPS starting after ``s`` extended to the left down to ``s``, and
  the shortest MUPSs that already contain ``[s, t]``.

Extensions are kept only when they are still palindromes, which is a comparison
against the maximal palindrome at the MUPS centre run. Any palindrome containing a MUPS
is unique, so uniqueness is never re-checked.
"""

from dataclasses import dataclass, field

from rle_sups import LOGGER, IndexInvariantError, QueryDomainError
from rle_sups.interval_index import (
    RmqIndex,
    SortedPositionIndex,
    build_rmq,
    pred,
    range_min_all,
    succ,
)
from rle_sups.mups import MupsList, extract_mups
from rle_sups.rle_core import RleString
from rle_sups.rle_eertree import build_rle_eertree
from rle_sups.rle_manacher import MaxPalTable, build_max_pal_table


@dataclass(frozen=True, eq=False)
class SupsIndex:
    """The SUPS query index of a run-length encoded string."""

    rle: RleString
    max_pal: MaxPalTable
    mups: MupsList
    beg_index: SortedPositionIndex
    end_index: SortedPositionIndex
    len_rmq: RmqIndex
    tree_size: int
    """Number of RLE-eertree nodes used during construction, with the empty root."""

    @property
    def index_bytes(self) -> int:
        """Bytes held by the index arrays."""

        arrays = (
            self.rle.exponents,
            self.rle.run_ends,
            self.max_pal.rle_radius,
            self.max_pal.max_len,
            self.mups.mups_beg,
            self.mups.mups_end,
            self.mups.center_run,
        )
        return sum(array.nbytes for array in arrays) + self.len_rmq.nbytes


@dataclass(frozen=True)
class SupsAnswer:
    """All SUPSs for a query interval, sorted by begin position."""

    intervals: list[tuple[int, int]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return bool(self.intervals)


def build_index(rle: RleString, check_inner_occurrences: bool = True) -> SupsIndex:
    """Preprocess a run-length encoded string for SUPS queries.

    Args:
        rle: The run-length encoded string.
        check_inner_occurrences: Passed on to MUPS extraction. Only verification of the
            campaign itself should turn this off.

    Examples:
        >>> from rle_sups.rle_core import parse_rle
        >>> index = build_index(parse_rle([("a", 5)]))
        >>> query(index, 2, 3).intervals
        [(1, 5)]
    """

    max_pal = build_max_pal_table(rle)
    tree = build_rle_eertree(rle, max_pal)
    mups = extract_mups(tree, rle, check_inner_occurrences)

    LOGGER.debug(
        f"Index built: m={rle.m}, n={rle.n}, tree nodes={tree.size}, MUPSs={len(mups)}"
    )
    return SupsIndex(
        rle=rle,
        max_pal=max_pal,
        mups=mups,
        beg_index=SortedPositionIndex(mups.mups_beg),
        end_index=SortedPositionIndex(mups.mups_end),
        len_rmq=build_rmq(mups.mups_len),
        tree_size=tree.size,
    )


def is_run_centered_palindrome(
    index: SupsIndex, center_run: int, beg: int, end: int
) -> bool:
    """Check that ``[beg, end]``, centred on a run, is a palindrome.

    The interval is a palindrome exactly when it is no longer than the maximal
    palindrome on the same centre. Intervals reaching past either end of the string are
    longer than that maximal palindrome, so they are rejected too.

    Raises:
        IndexInvariantError: if the interval is not centred on ``center_run``.
    """

    if beg + end != index.rle.run_center_doubled(center_run):
        raise IndexInvariantError(
            f"Interval [{beg},{end}] is not centred on run {center_run}"
        )
    return end - beg + 1 <= int(index.max_pal.max_len[center_run - 1])


def query(index: SupsIndex, s: int, t: int) -> SupsAnswer:
    """Find all SUPSs covering the interval ``[s, t]``.

    Args:
        index: The SUPS index.
        s: First position of the interval.
        t: Last position of the interval.

    Raises:
        QueryDomainError: if ``[s, t]`` is not an interval within ``[1, n]``.
    """

    n = index.rle.n
    if not (1 <= s <= n and 1 <= t <= n):
        raise QueryDomainError(f"interval out of range [1,{n}]")
    if s > t:
        raise QueryDomainError(f"interval start {s} is after its end {t}")

    mups = index.mups
    d = len(mups)
    if d == 0:
        return SupsAnswer()

    first_inside = succ(index.beg_index, s)
    last_inside = pred(index.end_index, t)
    inside = max(0, last_inside - first_inside + 1)

    if inside >= 2:
        return SupsAnswer()

    if inside == 1:
        rank = first_inside - 1
        i, j = int(mups.mups_beg[rank]), int(mups.mups_end[rank])
        z = max(i - s, t - j)
        if is_run_centered_palindrome(index, int(mups.center_run[rank]), i - z, j + z):
            return SupsAnswer([(i - z, j + z)])
        return SupsAnswer()

    # No MUPS inside: last_inside < first_inside
    candidates: list[tuple[int, int]] = []

    if last_inside >= 1:
        rank = last_inside - 1
        end = int(mups.mups_end[rank])
        beg = int(mups.mups_beg[rank]) - (t - end)
        if is_run_centered_palindrome(index, int(mups.center_run[rank]), beg, t):
            candidates.append((beg, t))

    if first_inside <= d:
        rank = first_inside - 1
        beg = int(mups.mups_beg[rank])
        end = int(mups.mups_end[rank]) + (beg - s)
        if is_run_centered_palindrome(index, int(mups.center_run[rank]), s, end):
            candidates.append((s, end))

    _, covering = range_min_all(index.len_rmq, last_inside + 1, first_inside - 1)
    candidates.extend(
        (int(mups.mups_beg[rank - 1]), int(mups.mups_end[rank - 1]))
        for rank in covering
    )

    if not candidates:
        return SupsAnswer()

    shortest = min(end - beg for beg, end in candidates)
    answer = sorted(
        (beg, end) for beg, end in candidates if end - beg == shortest
    )
    if len(set(answer)) != len(answer):
        raise IndexInvariantError(f"Duplicate SUPS candidates for [{s},{t}]: {answer}")

    return SupsAnswer(answer)
