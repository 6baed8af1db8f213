"""Test the batch module."""

import io
from contextlib import nullcontext as does_not_raise
from logging import ERROR

import pytest

from .conftest import EXAMPLE_RUNS, EXAMPLE_TEXT, record_found_in_log


@pytest.mark.parametrize(
    argnames="content, outcome, expected_runs",
    argvalues=[
        pytest.param(
            "b:3 a:2 b:2 a:1 b:2\na:3 b:2 a:3 b:3\n",
            does_not_raise(),
            EXAMPLE_RUNS,
            id="worked_example",
        ),
        pytest.param("", does_not_raise(), [], id="empty"),
        pytest.param("#:2 ~:10", does_not_raise(), [("#", 2), ("~", 10)], id="punct"),
        pytest.param(
            "a:2 a:1",
            pytest.raises(ValueError, match="adjacent runs share"),
            None,
            id="adjacent_equal",
        ),
        pytest.param(
            "a:0", pytest.raises(ValueError, match="is not >= 1"), None, id="zero"
        ),
        pytest.param(
            "ab:2",
            pytest.raises(ValueError, match="Token 1 is not <char>:<count>"),
            None,
            id="long_symbol",
        ),
        pytest.param(
            "a:2 ::1",
            pytest.raises(ValueError, match="Token 2 is not <char>:<count>"),
            None,
            id="colon_symbol",
        ),
        pytest.param(
            "a:-1",
            pytest.raises(ValueError, match="Token 1 is not <char>:<count>"),
            None,
            id="signed_count",
        ),
    ],
)
def test_parse_rle_text(content, outcome, expected_runs):
    """Test parsing RLE format files."""
    from rle_sups.batch import parse_rle_text

    with outcome:
        rle = parse_rle_text(content)

    if expected_runs is not None:
        assert [tuple(run) for run in rle.runs] == expected_runs


@pytest.mark.parametrize(
    argnames="content, expected",
    argvalues=[
        pytest.param(b"abba\n", "abba", id="trailing_newline"),
        pytest.param(b"abba\n\n", "abba\n", id="one_newline_stripped"),
        pytest.param(b"abba", "abba", id="no_newline"),
        pytest.param(b"a\xe9a", "a\xe9a", id="high_bytes"),
    ],
)
def test_load_text_plain(tmp_path, content, expected):
    """Test reading plain input files."""
    from rle_sups.batch import load_text

    path = tmp_path / "input.txt"
    path.write_bytes(content)

    assert load_text("plain", path).decode() == list(expected)


@pytest.mark.parametrize(
    argnames="line, expected",
    argvalues=[
        pytest.param("6 7", ("6-10", True), id="answer"),
        pytest.param("  9\t11 ", ("5-11", True), id="whitespace"),
        pytest.param("3 9", ("none", True), id="none"),
        pytest.param(
            "0 3", ("error: interval out of range [1,21]", False), id="out_of_range"
        ),
        pytest.param(
            "5 4",
            ("error: interval start 5 is after its end 4", False),
            id="reversed",
        ),
        pytest.param(
            "5", ("error: malformed query line '5'", False), id="one_field"
        ),
        pytest.param(
            "5 x", ("error: malformed query line '5 x'", False), id="not_a_number"
        ),
    ],
)
def test_answer_line(fixture_example_index, line, expected):
    """Test the output line for each kind of query line."""
    from rle_sups.batch import answer_line

    assert answer_line(fixture_example_index, line) == expected


def test_answer_queries_workers(fixture_example_index):
    """Test that threaded answers keep the input order."""
    from rle_sups.batch import answer_queries

    lines = [f"{s} {t}" for s in range(1, 22) for t in range(s, 22)]
    lines.insert(5, "")

    serial = answer_queries(fixture_example_index, lines)
    threaded = answer_queries(fixture_example_index, lines, workers=4)

    assert len(serial) == 231
    assert threaded == serial


def test_run_build_query(tmp_path):
    """Test a batch run through files, including a rejected query line."""
    from rle_sups.batch import run_build_query
    from rle_sups.config import CliConfig

    input_path = tmp_path / "example.txt"
    input_path.write_text(EXAMPLE_TEXT + "\n")
    queries_path = tmp_path / "queries.txt"
    queries_path.write_text("6 7\n9 11\n\n3 9\n22 22\n")

    output = io.StringIO()
    config = CliConfig(
        subcommand="build-query",
        input_path=str(input_path),
        queries_path=str(queries_path),
    )

    assert run_build_query(config, output=output) == 1
    assert output.getvalue().splitlines() == [
        "6-10",
        "5-11",
        "none",
        "error: interval out of range [1,21]",
    ]


@pytest.mark.parametrize(
    argnames="input_format, content, expected_log",
    argvalues=[
        pytest.param(
            "rle",
            "b:3 b:2",
            " ✗ Malformed RLE input: Run 2: adjacent runs share the symbol 'b'",
            id="malformed_rle",
        ),
        pytest.param("plain", None, None, id="missing_file"),
    ],
)
def test_run_build_query_bad_input(
    caplog, tmp_path, input_format, content, expected_log
):
    """Test that unreadable input fails before any query output."""
    from rle_sups.batch import run_build_query
    from rle_sups.config import CliConfig

    input_path = tmp_path / "input.txt"
    if content is not None:
        input_path.write_text(content)

    output = io.StringIO()
    config = CliConfig(
        subcommand="build-query",
        input_format=input_format,
        input_path=str(input_path),
        queries_path=str(tmp_path / "queries.txt"),
    )

    assert run_build_query(config, output=output) == 2
    assert output.getvalue() == ""
    if expected_log is not None:
        assert record_found_in_log(caplog, (ERROR, expected_log))
