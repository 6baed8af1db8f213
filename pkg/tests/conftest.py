"""Configuration and fixture definitions for testing."""

from itertools import groupby

import pytest
from hypothesis import strategies as st

EXAMPLE_TEXT = "bbbaabbabbaaabbaaabbb"
"""The main worked example, with runs b3 a2 b2 a1 b2 a3 b2 a3 b3."""

EXAMPLE_RUNS = [
    ("b", 3),
    ("a", 2),
    ("b", 2),
    ("a", 1),
    ("b", 2),
    ("a", 3),
    ("b", 2),
    ("a", 3),
    ("b", 3),
]

EXAMPLE_MUPS = [(3, 6), (7, 9), (8, 16), (12, 17)]


@st.composite
def rle_strings(draw, max_runs=10, max_exponent=3, alphabet="abc"):
    """Draw a non-empty canonical RleString.

    Repeated symbols drawn next to each other are merged into one run, so the string
    has between one and ``max_runs`` runs.
    """
    from rle_sups.rle_core import parse_rle

    drawn = draw(st.lists(st.sampled_from(alphabet), min_size=1, max_size=max_runs))
    symbols = [symbol for symbol, _ in groupby(drawn)]
    exponents = draw(
        st.lists(
            st.integers(1, max_exponent),
            min_size=len(symbols),
            max_size=len(symbols),
        )
    )
    return parse_rle(list(zip(symbols, exponents)))


def record_found_in_log(
    caplog: pytest.LogCaptureFixture,
    find: tuple[int, str],
) -> bool:
    """Look for a specific logging record in the captured log.

    Arguments:
        caplog: An instance of the caplog fixture
        find: A tuple giving the logging level and message to look for

    """

    try:
        # Iterate over the record tuples, ignoring the leading element
        # giving the logger name
        _ = next(msg for msg in caplog.record_tuples if msg[1:] == find)
        return True
    except StopIteration:
        return False


@pytest.fixture
def fixture_example_rle():
    """The main worked example as an RleString."""
    from rle_sups.rle_core import parse_rle

    return parse_rle(EXAMPLE_RUNS)


@pytest.fixture
def fixture_example_index(fixture_example_rle):
    """A SUPS index of the main worked example."""
    from rle_sups.sups_query import build_index

    return build_index(fixture_example_rle)


@pytest.fixture
def fixture_limits_file(tmp_path):
    """A configuration file with limits small enough for quick CLI runs."""

    path = tmp_path / "limits.yaml"
    path.write_text(
        "max_m: 6\n"
        "max_exponent: 3\n"
        "max_alphabet: 3\n"
        "case_count: 25\n"
        "exhaustive_max_length: 6\n"
        "bench_m: [20, 40]\n"
        "bench_exp_scales: [10, 1000]\n"
        "bench_queries: 50\n"
    )
    return path


@pytest.fixture(scope="session", autouse=True)
def fixture_mocked_config_path(session_mocker, tmp_path_factory):
    """Point the default configuration file at a missing path for all tests."""

    missing = tmp_path_factory.mktemp("user_config") / "config.yaml"

    session_mocker.patch(
        "rle_sups.config.default_config_path", return_value=missing
    )
