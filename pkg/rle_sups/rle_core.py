"""Run-length representation of a text.

The :class:`RleString` is the only representation of the text that the index ever
holds. Positions are 1-based and inclusive in decompressed coordinates, run indices are
1-based, and run centres are handled as doubled integers (``begin + end``) so that
half-integer centres stay in integer arithmetic.
"""

import operator
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from itertools import groupby
from typing import Any, NamedTuple, TypeAlias

import numpy as np
from numpy.typing import NDArray

from rle_sups import MalformedRleError

Symbol: TypeAlias = Any
"""A text symbol. Symbols only need equality and a total order."""

ExponentProfile: TypeAlias = tuple[NDArray[np.int64], NDArray[np.int64]]


class Run(NamedTuple):
    """A character run: ``exponent`` repetitions of ``symbol``.

    Runs compare as ``(symbol, exponent)`` pairs, which is the order used to sort the
    out-going edges of the RLE-eertree.
    """

    symbol: Symbol
    exponent: int


@dataclass(frozen=True, eq=False)
class RleString:
    """An immutable run-length encoded string.

    Use :func:`encode_plain` or :func:`parse_rle` to create instances: both check that
    the runs are canonical (adjacent runs carry different symbols and every exponent is
    positive).
    """

    runs: tuple[Run, ...]
    """The run sequence."""
    exponents: NDArray[np.int64]
    """The run exponents as 64-bit integers."""
    run_ends: NDArray[np.int64]
    """Cumulative end position of each run."""

    @property
    def m(self) -> int:
        """The number of runs."""
        return len(self.runs)

    @property
    def n(self) -> int:
        """The decompressed length of the string."""
        return int(self.run_ends[-1]) if self.runs else 0

    @cached_property
    def sigma_rle(self) -> int:
        """The number of distinct runs."""
        return len(set(self.runs))

    @cached_property
    def exponent_profile(self) -> dict[Symbol, ExponentProfile]:
        """Sorted run exponents per symbol, with suffix sums of the sorted values."""

        by_symbol: dict[Symbol, list[int]] = {}
        for run in self.runs:
            by_symbol.setdefault(run.symbol, []).append(run.exponent)

        profile = {}
        for symbol, values in by_symbol.items():
            ordered = np.sort(np.asarray(values, dtype=np.int64))
            suffix_sums = np.cumsum(ordered[::-1])[::-1]
            profile[symbol] = (ordered, suffix_sums)
        return profile

    def _check_run(self, j: int) -> None:
        if not 1 <= j <= self.m:
            raise IndexError(f"Run index {j} out of range [1,{self.m}]")

    def run_begin(self, j: int) -> int:
        """Decompressed position of the first character of run ``j``."""
        self._check_run(j)
        return int(self.run_ends[j - 1] - self.exponents[j - 1]) + 1

    def run_end(self, j: int) -> int:
        """Decompressed position of the last character of run ``j``."""
        self._check_run(j)
        return int(self.run_ends[j - 1])

    def run_center_doubled(self, j: int) -> int:
        """Twice the centre of run ``j``, that is ``run_begin(j) + run_end(j)``."""
        return self.run_begin(j) + self.run_end(j)

    def run_of_position(self, p: int) -> int:
        """Index of the run containing decompressed position ``p``."""
        if not 1 <= p <= self.n:
            raise IndexError(f"Position {p} out of range [1,{self.n}]")
        return int(np.searchsorted(self.run_ends, p, side="left")) + 1

    def decode(self) -> list[Symbol]:
        """Decompress the string. Only sensible for small test inputs."""
        return [run.symbol for run in self.runs for _ in range(run.exponent)]


def _from_runs(runs: tuple[Run, ...]) -> RleString:
    exponents = np.fromiter(
        (run.exponent for run in runs), dtype=np.int64, count=len(runs)
    )
    return RleString(runs=runs, exponents=exponents, run_ends=np.cumsum(exponents))


def encode_plain(text: Sequence[Symbol]) -> RleString:
    """Run-length encode a plain symbol sequence.

    Args:
        text: The symbols of the string, for example a ``str``.

    Examples:
        >>> rle = encode_plain("aacccccccbbabbbb")
        >>> [(run.symbol, run.exponent) for run in rle.runs]
        [('a', 2), ('c', 7), ('b', 2), ('a', 1), ('b', 4)]
        >>> rle.m, rle.n
        (5, 16)
    """

    runs = tuple(Run(symbol, sum(1 for _ in group)) for symbol, group in groupby(text))
    return _from_runs(runs)


def parse_rle(tokens: Iterable[tuple[Symbol, int]]) -> RleString:
    """Create an RleString from ``(symbol, exponent)`` tokens.

    The tokens must already be canonical: equal adjacent symbols are rejected rather
    than merged.

    Args:
        tokens: An iterable of symbol and exponent pairs.

    Raises:
        MalformedRleError: if an exponent is not a positive integer or two adjacent
            tokens share a symbol.
    """

    runs: list[Run] = []
    for position, (symbol, exponent) in enumerate(tokens, start=1):
        try:
            exponent = operator.index(exponent)
        except TypeError:
            raise MalformedRleError(
                f"Run {position}: exponent {exponent!r} is not an integer"
            )
        if exponent < 1:
            raise MalformedRleError(f"Run {position}: exponent {exponent} is not >= 1")
        if runs and runs[-1].symbol == symbol:
            raise MalformedRleError(
                f"Run {position}: adjacent runs share the symbol {symbol!r}"
            )
        runs.append(Run(symbol, exponent))

    return _from_runs(tuple(runs))
