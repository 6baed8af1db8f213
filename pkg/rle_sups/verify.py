"""Verification of the SUPS index against the definition-level oracle.

The campaign runs three suites:

* ``worked-examples``: the worked strings used throughout the documentation;
* ``exhaustive``: every binary string up to a configured length;
* ``random``: seeded random run-length encoded strings.

Every case checks the run-centred maximal palindrome lengths, the MUPS list and the
SUPS answer for every interval against the oracle, along with the structural bounds on
the tree size, the MUPS count and the number of distinct palindromes. The first failure
of each suite is reported; random failures are first shrunk by dropping runs and
lowering exponents while the failure persists.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import product

import numpy as np

from rle_sups import LOGGER, IndexInvariantError
from rle_sups.config import ALPHABET, CliConfig
from rle_sups.oracle import (
    oracle_distinct_palindromes,
    oracle_mups,
    oracle_run_centered_maximal,
    oracle_sups_all,
)
from rle_sups.rle_core import RleString, encode_plain, parse_rle
from rle_sups.sups_query import build_index, query
"""Symbols used for generated strings."""

WORKED_EXAMPLES = (
    parse_rle(
        [("b", 3), ("a", 2), ("b", 2), ("a", 1), ("b", 2)]
        + [("a", 3), ("b", 2), ("a", 3), ("b", 3)]
    ),
    encode_plain("caabbcccbbaaaac"),
    encode_plain("aacccccccbbabbbb"),
)
"""Worked example strings."""


def random_rle(
    rng: np.random.Generator, m: int, max_exponent: int, alphabet_size: int
) -> RleString:
    """Generate a random run-length encoded string with exactly ``m`` runs.

    Each symbol is drawn from the first ``alphabet_size`` letters, excluding the symbol
    of the previous run, and exponents are uniform in ``[1, max_exponent]``.
    """

    if alphabet_size < 2 and m > 1:
        raise ValueError("At least two symbols are needed for more than one run")

    steps = rng.integers(1, max(alphabet_size, 2), size=m)
    if m:
        steps[0] = rng.integers(0, alphabet_size)
    codes = np.cumsum(steps) % alphabet_size
    exponents = rng.integers(1, max_exponent + 1, size=m, dtype=np.int64)

    return parse_rle(zip((ALPHABET[code] for code in codes), exponents.tolist()))


@dataclass
class Mismatch:
    """A disagreement between the index and the oracle."""

    text: str
    check: str
    expected: object
    got: object
    interval: tuple[int, int] | None = None

    def describe(self) -> str:
        """A one line summary of the counterexample."""
        where = "" if self.interval is None else f" interval {list(self.interval)}"
        return (
            f"string {self.text!r}{where} [{self.check}]: "
            f"expected {self.expected}, got {self.got}"
        )


def compare_with_oracle(
    rle: RleString, check_inner_occurrences: bool = True
) -> Mismatch | None:
    """Check the index of one string against the oracle.

    Args:
        rle: The string to check.
        check_inner_occurrences: Passed on to index construction.

    Returns:
        The first mismatch found, or None if the index agrees with the oracle.
    """

    symbols = rle.decode()
    text = "".join(str(symbol) for symbol in symbols)
    expected_mups = oracle_mups(symbols)

    try:
        index = build_index(rle, check_inner_occurrences)
    except IndexInvariantError as excep:
        return Mismatch(text, "build", expected_mups, f"error: {excep!s}")

    distinct = oracle_distinct_palindromes(symbols)
    bounds = (
        ("tree size <= 2m+1", index.tree_size, 2 * rle.m + 1),
        ("MUPS count <= m", len(index.mups), rle.m),
        ("distinct palindromes <= n+1", distinct, rle.n + 1),
    )
    for check, value, bound in bounds:
        if value > bound:
            return Mismatch(text, check, f"<= {bound}", value)

    expected_lengths = oracle_run_centered_maximal(symbols)
    got_lengths = index.max_pal.max_len.tolist()
    if got_lengths != expected_lengths:
        return Mismatch(text, "max_len", expected_lengths, got_lengths)

    got_mups = index.mups.intervals()
    if got_mups != expected_mups:
        return Mismatch(text, "MUPS", expected_mups, got_mups)

    expected_sups = oracle_sups_all(symbols)
    for s in range(1, rle.n + 1):
        for t in range(s, rle.n + 1):
            got = query(index, s, t).intervals
            expected = expected_sups.get((s, t), [])
            if got != expected:
                return Mismatch(text, "SUPS", expected, got, interval=(s, t))

    return None


def _shrink(rle: RleString) -> Iterator[RleString]:
    """Smaller variants of a string: one run dropped or one exponent lowered."""

    runs = rle.runs
    for drop in range(len(runs)):
        kept = runs[:drop] + runs[drop + 1 :]
        yield encode_plain(
            [symbol for symbol, exponent in kept for _ in range(exponent)]
        )
    for lower, (symbol, exponent) in enumerate(runs):
        if exponent > 1:
            yield parse_rle(
                runs[:lower] + ((symbol, exponent - 1),) + runs[lower + 1 :]
            )


def minimize_counterexample(
    rle: RleString, mismatch: Mismatch, check_inner_occurrences: bool = True
) -> Mismatch:
    """Greedily shrink a failing string while it keeps failing.

    Args:
        rle: A string on which the index disagrees with the oracle.
        mismatch: The disagreement found on ``rle``.
        check_inner_occurrences: Passed on to index construction.
    """

    shrinking = True
    while shrinking:
        shrinking = False
        for candidate in _shrink(rle):
            if candidate.m == 0:
                continue
            found = compare_with_oracle(candidate, check_inner_occurrences)
            if found is not None:
                rle, mismatch, shrinking = candidate, found, True
                break
    return mismatch


def run_suite(
    name: str,
    cases: Iterable[RleString],
    check_inner_occurrences: bool = True,
    minimize: bool = False,
) -> bool:
    """Run one suite of oracle comparisons and log its verdict.

    Args:
        name: The suite name used in the log.
        cases: The strings to check.
        check_inner_occurrences: Passed on to index construction.
        minimize: Shrink the first counterexample before reporting it.

    Returns:
        True if every case agreed with the oracle.
    """

    total = 0
    failures = 0
    first: Mismatch | None = None

    for rle in cases:
        total += 1
        mismatch = compare_with_oracle(rle, check_inner_occurrences)
        if mismatch is None:
            continue
        failures += 1
        if first is None:
            first = (
                minimize_counterexample(rle, mismatch, check_inner_occurrences)
                if minimize
                else mismatch
            )

    if total == 0:
        LOGGER.warning(f" ! {name}: PASS (vacuous, no cases run)")
        return True

    if first is None:
        LOGGER.info(f" ✓ {name}: PASS")
        return True

    LOGGER.error(f" ✗ {name}: FAIL ({failures} of {total} cases)")
    LOGGER.error(f"   counterexample: {first.describe()}")
    return False


def exhaustive_binary(max_length: int) -> Iterator[RleString]:
    """Every string over ``ab`` of length 1 to ``max_length``."""

    for length in range(1, max_length + 1):
        for symbols in product("ab", repeat=length):
            yield encode_plain(symbols)


def random_cases(
    seed: int, count: int, max_m: int, max_exponent: int, max_alphabet: int
) -> Iterator[RleString]:
    """Seeded random strings with up to ``max_m`` runs."""

    rng = np.random.default_rng(seed)
    for _ in range(count):
        m = int(rng.integers(1, max_m + 1))
        alphabet_size = int(rng.integers(2, max_alphabet + 1))
        yield random_rle(rng, m, max_exponent, alphabet_size)


def run_verify(config: CliConfig) -> int:
    """Run the verification campaign.

    Args:
        config: The command configuration, providing the seed and limits.

    Returns:
        0 if every suite passed and 1 otherwise.
    """

    limits = config.limits
    check = config.check_inner_occurrences
    if not check:
        LOGGER.warning(" ! Inner occurrence check disabled: expecting failures")

    passed = [
        run_suite("worked-examples", WORKED_EXAMPLES, check),
        run_suite(
            f"exhaustive(binary,n≤{limits.exhaustive_max_length})",
            exhaustive_binary(limits.exhaustive_max_length),
            check,
        ),
        run_suite(
            f"random({limits.case_count} cases)",
            random_cases(
                config.seed,
                limits.case_count,
                limits.max_m,
                limits.max_exponent,
                limits.max_alphabet,
            ),
            check,
            minimize=True,
        ),
    ]

    return 0 if all(passed) else 1
