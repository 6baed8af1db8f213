"""A module providing the main command line interface for the SUPS tool."""

import argparse
import sys
import textwrap
from dataclasses import replace
from pathlib import Path

from rle_sups import LOGGER
from rle_sups.batch import run_build_query
from rle_sups.bench import run_bench
from rle_sups.config import DEFAULT_SEED, CliConfig, load_limits
from rle_sups.verify import run_verify


def sups_cli(args_list: list[str] | None = None) -> int:
    """Shortest unique palindromic substring queries on run-length encoded text.

    The build-query subcommand builds an index from a plain or run-length encoded text
    file and answers one query per line, given as two 1-based positions `s t`. The
    verify subcommand checks the index against a brute force oracle and the bench
    subcommand reports construction and query scaling as CSV.

    Args:
        args_list: This is a developer and testing facing argument that is used to
            simulate command line arguments, allowing this function to be called
            directly in tests.

    Returns:
        An integer exit code: 0 for success, 1 for verification or query errors and 2
        for usage, input or configuration errors.
    """

    # If no arguments list is provided
    if args_list is None:
        args_list = sys.argv[1:]

    # Check function docstring exists to safeguard against -OO mode, and strip off the
    # description of the function args_list, which should not be included in the command
    # line docs
    if sups_cli.__doc__ is not None:
        desc = textwrap.dedent("\n".join(sups_cli.__doc__.splitlines()[:-10]))
    else:
        desc = "Python in -OO mode: no docs"

    fmt = argparse.RawDescriptionHelpFormatter
    parser = argparse.ArgumentParser(prog="sups", description=desc, formatter_class=fmt)

    parser.add_argument(
        "--config",
        type=Path,
        help="YAML file of verification and benchmark limits",
        default=None,
    )

    subparsers = parser.add_subparsers(dest="subcommand", metavar="")

    build_query_subparser = subparsers.add_parser(
        "build-query",
        description="""Build a SUPS index from a text file and answer queries. Each
            query line holds two positions `s t` and produces one output line: `none`,
            the SUPS intervals as `beg-end` pairs or `error: <reason>`. Queries are
            read from standard input unless a queries file is given.""",
        help="Build an index and answer queries",
    )

    build_query_subparser.add_argument(
        "--format",
        dest="input_format",
        choices=("plain", "rle"),
        default="plain",
        help="Input file format",
    )

    build_query_subparser.add_argument(
        "--input", dest="input_path", type=Path, required=True, help="Text file"
    )

    build_query_subparser.add_argument(
        "--queries", dest="queries_path", type=Path, default=None, help="Query file"
    )

    build_query_subparser.add_argument(
        "--workers", type=int, default=None, help="Number of query threads"
    )

    verify_subparser = subparsers.add_parser(
        "verify",
        description="""Compare the index with a brute force oracle on the worked
            example strings, on every binary string up to a maximum length and on
            seeded random run-length encoded strings.""",
        help="Verify the index against the oracle",
    )

    verify_subparser.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help="Random case seed"
    )

    verify_subparser.add_argument(
        "--cases", type=int, default=None, help="Number of random cases"
    )

    verify_subparser.add_argument(
        "--skip-inner-check",
        action="store_true",
        default=False,
        help=argparse.SUPPRESS,
    )

    bench_subparser = subparsers.add_parser(
        "bench",
        description="""Report index build time, index size and query throughput for
            random strings at several run counts and exponent scales. One string is
            drawn per run count with exponents up to the smallest scale, and larger
            scales multiply those exponents, so they are multiples of
            scale // smallest rather than uniform up to the scale.""",
        help="Benchmark index scaling",
    )

    bench_subparser.add_argument(
        "--seed", type=int, default=DEFAULT_SEED, help="Random string seed"
    )

    args = parser.parse_args(args=args_list)

    if args.subcommand is None:
        parser.print_help()
        return 2

    # Get the limits
    try:
        limits = load_limits(args.config)
    except ValueError as excep:
        LOGGER.error(f" ✗ Could not load configuration\n{excep!s}")
        return 2

    if getattr(args, "cases", None) is not None:
        limits = replace(limits, case_count=args.cases)
    if getattr(args, "workers", None) is not None:
        limits = replace(limits, workers=args.workers)

    if limits.case_count < 0 or limits.workers < 1:
        LOGGER.error(" ✗ --cases must not be negative and --workers must be positive")
        return 2

    config = CliConfig(
        subcommand=args.subcommand,
        input_format=getattr(args, "input_format", "plain"),
        input_path=str(args.input_path) if hasattr(args, "input_path") else None,
        queries_path=(
            str(args.queries_path) if getattr(args, "queries_path", None) else None
        ),
        seed=getattr(args, "seed", DEFAULT_SEED),
        check_inner_occurrences=not getattr(args, "skip_inner_check", False),
        limits=limits,
    )

    match config.subcommand:
        case "build-query":
            return run_build_query(config)
        case "verify":
            return run_verify(config)
        case "bench":
            return run_bench(config)

    return 2
