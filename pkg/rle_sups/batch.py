"""Batch SUPS queries against an index built from a text file.

Two input formats are supported:

* ``plain``: the raw bytes of the text, with at most one trailing newline removed.
* ``rle``: whitespace separated ``<char>:<count>`` tokens, where ``<char>`` is a single
  printable byte other than ``:`` and ``<count>`` is a positive decimal integer.

Bytes are decoded as latin-1, so each symbol is a one character string. Query lines
hold two 1-based positions, ``s t``, and produce one output line each: ``none``, or the
SUPS intervals as ``beg-end`` pairs in increasing order, or ``error: <reason>``.
"""

import re
import sys
from collections.abc import Iterable
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Literal, TextIO

from rle_sups import LOGGER, MalformedRleError, QueryDomainError
from rle_sups.config import CliConfig
from rle_sups.rle_core import RleString, encode_plain, parse_rle
from rle_sups.sups_query import SupsIndex, build_index, query

RLE_TOKEN = re.compile(r"([^\s:]):(\d+)")
"""A single RLE file token."""


def parse_rle_text(content: str) -> RleString:
    """Parse the contents of an RLE format file.

    Raises:
        MalformedRleError: if a token is not of the form ``<char>:<count>`` or the
            tokens do not form a canonical run-length encoding.
    """

    tokens = []
    for position, token in enumerate(content.split(), start=1):
        match = RLE_TOKEN.fullmatch(token)
        if match is None or not match.group(1).isprintable():
            raise MalformedRleError(
                f"Token {position} is not <char>:<count>: {token!r}"
            )
        tokens.append((match.group(1), int(match.group(2))))

    return parse_rle(tokens)


def load_text(input_format: Literal["plain", "rle"], path: Path) -> RleString:
    """Read a text file in either input format.

    Raises:
        OSError: if the file cannot be read.
        MalformedRleError: if an RLE file is malformed.
    """

    content = path.read_bytes().decode("latin-1")
    if input_format == "rle":
        return parse_rle_text(content)

    if content.endswith("\n"):
        content = content[:-1]
    return encode_plain(content)


def answer_line(index: SupsIndex, line: str) -> tuple[str, bool]:
    """Answer one query line.

    Returns:
        The output line and whether the query line was valid.
    """

    fields = line.split()
    try:
        s, t = (int(value) for value in fields)
    except ValueError:
        return f"error: malformed query line {line.strip()!r}", False

    try:
        answer = query(index, s, t)
    except QueryDomainError as excep:
        return f"error: {excep!s}", False

    if not answer:
        return "none", True
    return " ".join(f"{beg}-{end}" for beg, end in answer.intervals), True


def answer_queries(
    index: SupsIndex, lines: Iterable[str], workers: int = 1
) -> list[tuple[str, bool]]:
    """Answer query lines in input order, skipping blank lines.

    Args:
        index: The SUPS index.
        lines: The query lines.
        workers: The number of threads sharing the index.
    """

    queries = [line for line in lines if line.strip()]
    if workers == 1:
        return [answer_line(index, line) for line in queries]

    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(lambda line: answer_line(index, line), queries))


def run_build_query(config: CliConfig, output: TextIO | None = None) -> int:
    """Build an index from the input file and answer a batch of queries.

    Queries are read from ``config.queries_path`` or from standard input. Invalid query
    lines are reported on their output line and the batch continues.

    Args:
        config: The command configuration.
        output: Stream for the answers, standard output by default.

    Returns:
        0 if every query was valid, 1 if any query line was rejected and 2 if the
        input or query files could not be read.
    """

    output = sys.stdout if output is None else output

    if config.input_path is None:
        LOGGER.error(" ✗ No input file provided")
        return 2

    try:
        rle = load_text(config.input_format, Path(config.input_path))
    except OSError as excep:
        LOGGER.error(f" ✗ Cannot read input file: {excep!s}")
        return 2
    except MalformedRleError as excep:
        LOGGER.error(f" ✗ Malformed RLE input: {excep!s}")
        return 2

    index = build_index(rle)
    LOGGER.info(
        f" ✓ Index built: {rle.m} runs, length {rle.n}, {len(index.mups)} MUPSs"
    )

    try:
        if config.queries_path is None:
            lines = sys.stdin.read().splitlines()
        else:
            lines = Path(config.queries_path).read_text().splitlines()
    except OSError as excep:
        LOGGER.error(f" ✗ Cannot read queries: {excep!s}")
        return 2

    results = answer_queries(index, lines, workers=config.limits.workers)
    for text, _ in results:
        print(text, file=output)

    return 0 if all(valid for _, valid in results) else 1
