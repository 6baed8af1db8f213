"""Minimal unique palindromic substrings (MUPSs) from the RLE-eertree.

Every MUPS is centred on a run centre, so there are at most ``m`` of them and no two
share a centre run. A MUPS is either a single run ``a^e``, when ``e`` is the unique
largest exponent among the runs of ``a``, or has the form ``a^g P a^g`` for a node
``P`` of the tree. For a node ``P`` and a symbol ``a`` on its out-going edges, let
``emax`` and ``esecond`` be the largest and second largest exponents of ``a`` on those
edges. A MUPS of that form exists only when the ``a^emax P a^emax`` child occurs exactly
once, and then it is:

* ``a^(esecond + 1) P a^(esecond + 1)`` when ``esecond`` exists;
* ``a P a`` when ``a`` labels a single edge and ``P`` itself occurs at least twice in
  the text. Without the second condition the inner palindrome ``P`` could be unique and
  the candidate would contain a shorter MUPS.
"""

from collections.abc import Iterator
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from numpy.typing import NDArray

from rle_sups import LOGGER, IndexInvariantError
from rle_sups.rle_core import RleString
from rle_sups.rle_eertree import RleEertree, substring_occurrences


class MupsCandidate(NamedTuple):
    """A MUPS occurrence with its centre run."""

    beg: int
    end: int
    center_run: int


@dataclass(frozen=True, eq=False)
class MupsList:
    """The MUPSs of a string as parallel arrays sorted by begin position."""

    mups_beg: NDArray[np.int64]
    mups_end: NDArray[np.int64]
    mups_len: NDArray[np.int64]
    center_run: NDArray[np.int64]

    def __len__(self) -> int:
        return len(self.mups_beg)

    def intervals(self) -> list[tuple[int, int]]:
        """The MUPS intervals as ``(begin, end)`` tuples."""
        return list(zip(self.mups_beg.tolist(), self.mups_end.tolist()))


def single_run_mups(rle: RleString) -> list[MupsCandidate]:
    """Find the MUPSs consisting of one whole run.

    For each symbol the run with the largest exponent is a MUPS exactly when no other
    run of that symbol has the same exponent.
    """

    best: dict[object, tuple[int, int, bool]] = {}
    for j, (symbol, exponent) in enumerate(rle.runs, start=1):
        current = best.get(symbol)
        if current is None or exponent > current[0]:
            best[symbol] = (exponent, j, True)
        elif exponent == current[0]:
            best[symbol] = (exponent, current[1], False)

    return [
        MupsCandidate(rle.run_begin(j), rle.run_end(j), j)
        for _, j, unique in best.values()
        if unique
    ]


def composite_mups(
    tree: RleEertree, rle: RleString, check_inner_occurrences: bool = True
) -> Iterator[MupsCandidate]:
    """Find the MUPSs of the form ``a^g P a^g`` for tree nodes ``P``.

    Args:
        tree: A fully built RLE-eertree with sorted edges.
        rle: The string the tree was built from.
        check_inner_occurrences: Require ``P`` to occur at least twice before emitting
            ``a P a``. Disabling this is only useful to check that the verification
            campaign detects the resulting bad MUPS lists.
    """

    nodes = tree.nodes
    for node_id in tree.non_root_nodes():
        # Sorted edges group each symbol's exponents in increasing order
        top: dict[object, tuple[int, int]] = {}
        second: dict[object, int] = {}
        for (symbol, exponent), child in nodes[node_id].edges.items():
            if symbol in top:
                second[symbol] = top[symbol][0]
            top[symbol] = (exponent, child)

        for symbol, (emax, child) in top.items():
            if nodes[child].count != 1:
                continue

            if symbol in second:
                flank = second[symbol] + 1
            elif (
                not check_inner_occurrences
                or substring_occurrences(tree, rle, node_id) >= 2
            ):
                flank = 1
            else:
                continue

            centre = nodes[child].sample_center_run
            length = nodes[child].char_len - 2 * (emax - flank)
            beg = (rle.run_center_doubled(centre) - length + 1) // 2
            yield MupsCandidate(beg, beg + length - 1, centre)


def assemble_sorted(candidates: list[MupsCandidate], rle: RleString) -> MupsList:
    """Bucket MUPSs by centre run and read them off in text order.

    Raises:
        IndexInvariantError: if two candidates share a centre run, or the resulting
            list is not strictly increasing in both begin and end positions.
    """

    by_run: list[MupsCandidate | None] = [None] * rle.m
    for candidate in candidates:
        slot = candidate.center_run - 1
        existing = by_run[slot]
        if existing is not None:
            raise IndexInvariantError(
                f"MUPS candidates [{existing.beg},{existing.end}] and "
                f"[{candidate.beg},{candidate.end}] share centre run "
                f"{candidate.center_run}"
            )
        by_run[slot] = candidate

    ordered = [candidate for candidate in by_run if candidate is not None]
    mups_beg = np.fromiter((c.beg for c in ordered), dtype=np.int64, count=len(ordered))
    mups_end = np.fromiter((c.end for c in ordered), dtype=np.int64, count=len(ordered))
    center_run = np.fromiter(
        (c.center_run for c in ordered), dtype=np.int64, count=len(ordered)
    )

    if np.any(np.diff(mups_beg) <= 0) or np.any(np.diff(mups_end) <= 0):
        nested = [
            f"[{a.beg},{a.end}]/[{b.beg},{b.end}]"
            for a, b in zip(ordered, ordered[1:])
            if b.beg <= a.beg or b.end <= a.end
        ]
        raise IndexInvariantError(f"Nested MUPS intervals: {', '.join(nested)}")

    return MupsList(
        mups_beg=mups_beg,
        mups_end=mups_end,
        mups_len=mups_end - mups_beg + 1,
        center_run=center_run,
    )


def extract_mups(
    tree: RleEertree, rle: RleString, check_inner_occurrences: bool = True
) -> MupsList:
    """Compute the sorted MUPS list of a string from its RLE-eertree.

    Args:
        tree: A fully built RLE-eertree with sorted edges.
        rle: The string the tree was built from.
        check_inner_occurrences: See :func:`composite_mups`.
    """

    candidates = single_run_mups(rle)
    candidates.extend(composite_mups(tree, rle, check_inner_occurrences))
    mups = assemble_sorted(candidates, rle)
    LOGGER.debug(f"Found {len(mups)} MUPSs over {rle.m} runs")
    return mups


def dump_mups(mups: MupsList) -> str:
    """Render one ``beg end len center_run`` line per MUPS."""

    return "\n".join(
        f"{beg} {end} {length} {centre}"
        for beg, end, length, centre in zip(
            mups.mups_beg.tolist(),
            mups.mups_end.tolist(),
            mups.mups_len.tolist(),
            mups.center_run.tolist(),
        )
    )
