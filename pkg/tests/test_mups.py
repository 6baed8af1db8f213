"""Test the mups module."""

from string import ascii_lowercase

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from .conftest import EXAMPLE_MUPS, EXAMPLE_TEXT, rle_strings


def _extract(rle, check_inner_occurrences=True):
    from rle_sups.mups import extract_mups
    from rle_sups.rle_eertree import build_rle_eertree
    from rle_sups.rle_manacher import build_max_pal_table

    tree = build_rle_eertree(rle, build_max_pal_table(rle))
    return extract_mups(tree, rle, check_inner_occurrences)


def test_extract_mups_worked_example(fixture_example_rle):
    """Test the MUPS list of the main worked example."""

    mups = _extract(fixture_example_rle)

    assert mups.intervals() == EXAMPLE_MUPS
    assert mups.mups_len.tolist() == [4, 3, 9, 6]
    assert mups.center_run.tolist() == [2, 4, 6, 7]


@pytest.mark.parametrize(
    argnames="text, expected",
    argvalues=[
        pytest.param("a", [(1, 1)], id="single_symbol"),
        pytest.param("aaaa", [(1, 4)], id="single_run"),
        pytest.param("abab", [(1, 3), (2, 4)], id="tied_runs"),
        pytest.param("aabaa", [(3, 3)], id="unique_centre"),
        pytest.param("abaaba", [(3, 4)], id="square_run"),
    ],
)
def test_extract_mups_small(text, expected):
    """Test MUPS lists of small strings."""
    from rle_sups.oracle import oracle_mups
    from rle_sups.rle_core import encode_plain

    assert oracle_mups(text) == expected
    assert _extract(encode_plain(text)).intervals() == expected


def test_extract_mups_empty():
    """Test that the empty string has no MUPS."""
    from rle_sups.rle_core import parse_rle

    mups = _extract(parse_rle([]))

    assert len(mups) == 0
    assert mups.intervals() == []


@given(rle=rle_strings(max_runs=13, max_exponent=4))
@settings(max_examples=200, deadline=None)
def test_extract_mups_oracle_random(rle):
    """Test MUPS lists against the oracle on random strings."""
    from rle_sups.oracle import oracle_mups

    mups = _extract(rle)

    assert mups.intervals() == oracle_mups(rle.decode())
    assert len(mups) <= rle.m
    assert np.all(np.diff(mups.mups_beg) > 0)
    assert np.all(np.diff(mups.mups_end) > 0)


@given(exponents=st.lists(st.integers(1, 10**9), min_size=1, max_size=26))
def test_extract_mups_distinct_symbols(exponents):
    """Test that every run is a MUPS when no symbol repeats."""
    from rle_sups.rle_core import parse_rle

    rle = parse_rle(list(zip(ascii_lowercase, exponents)))

    mups = _extract(rle)

    assert len(mups) == rle.m
    assert mups.intervals() == [
        (rle.run_begin(j), rle.run_end(j)) for j in range(1, rle.m + 1)
    ]


def test_extract_mups_without_inner_check(fixture_example_rle):
    """Test that skipping the inner occurrence check breaks the MUPS list."""
    from rle_sups import IndexInvariantError

    with pytest.raises(IndexInvariantError, match="share centre run 4"):
        _extract(fixture_example_rle, check_inner_occurrences=False)


@pytest.mark.parametrize(
    argnames="candidates, message",
    argvalues=[
        pytest.param(
            [(3, 6, 2), (1, 8, 2)], "share centre run 2", id="shared_centre_run"
        ),
        pytest.param(
            [(3, 6, 2), (1, 12, 4)], "Nested MUPS intervals", id="nested"
        ),
    ],
)
def test_assemble_sorted_invariants(fixture_example_rle, candidates, message):
    """Test that inconsistent candidate sets are rejected."""
    from rle_sups import IndexInvariantError
    from rle_sups.mups import MupsCandidate, assemble_sorted

    with pytest.raises(IndexInvariantError, match=message):
        assemble_sorted(
            [MupsCandidate(*candidate) for candidate in candidates], fixture_example_rle
        )


def test_dump_mups(fixture_example_rle):
    """Test the MUPS debug dump."""
    from rle_sups.mups import dump_mups

    assert dump_mups(_extract(fixture_example_rle)).splitlines() == [
        "3 6 4 2",
        "7 9 3 4",
        "8 16 9 6",
        "12 17 6 7",
    ]


@pytest.mark.parametrize(
    argnames="text, expected",
    argvalues=[
        pytest.param("aaabaa", [(1, 3, 1), (4, 4, 2)], id="both_unique"),
        pytest.param("aabaa", [(3, 3, 2)], id="tied_largest"),
        pytest.param(EXAMPLE_TEXT, [], id="worked_example"),
    ],
)
def test_single_run_mups(text, expected):
    """Test that only a uniquely largest run of a symbol is a MUPS."""
    from rle_sups.mups import single_run_mups
    from rle_sups.rle_core import encode_plain

    assert single_run_mups(encode_plain(text)) == expected


def test_composite_mups(fixture_example_rle):
    """Test the flanked MUPSs of the worked example with their centre runs."""
    from rle_sups.mups import composite_mups
    from rle_sups.rle_eertree import build_rle_eertree
    from rle_sups.rle_manacher import build_max_pal_table

    rle = fixture_example_rle
    tree = build_rle_eertree(rle, build_max_pal_table(rle))

    assert sorted(composite_mups(tree, rle)) == [
        (3, 6, 2),
        (7, 9, 4),
        (8, 16, 6),
        (12, 17, 7),
    ]
