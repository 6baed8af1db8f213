"""Scaling benchmark for SUPS index construction and queries.

For every configured run count ``m`` a random symbol sequence and a set of base
exponents are drawn once. Each exponent scale then multiplies the base exponents by
``scale // min(scales)``, so the run structure seen by the index is the same at every
scale and only the string length ``n`` grows. The index size should therefore be
identical across scales and the build time should not depend on ``n``.

One CSV row is written per configuration::

    m,exp_scale,n,build_ms,index_bytes,queries_per_sec
"""

import csv
import sys
import time
from typing import TextIO

import numpy as np
from numpy.typing import NDArray

from rle_sups import LOGGER
from rle_sups.config import CliConfig
from rle_sups.rle_core import RleString, parse_rle
from rle_sups.sups_query import SupsIndex, build_index, query
from rle_sups.verify import random_rle

CSV_FIELDS = ("m", "exp_scale", "n", "build_ms", "index_bytes", "queries_per_sec")

BUILD_RATIO_LIMIT = 2.0
"""Largest acceptable build time ratio between exponent scales for one ``m``."""


def scale_exponents(base: RleString, factor: int) -> RleString:
    """Multiply every exponent of ``base`` by ``factor``."""

    return parse_rle((symbol, exponent * factor) for symbol, exponent in base.runs)


def random_intervals(
    rng: np.random.Generator, n: int, count: int
) -> NDArray[np.int64]:
    """Draw ``count`` uniform random intervals ``[s, t]`` of ``[1, n]`` as rows."""

    bounds = rng.integers(1, n + 1, size=(count, 2), dtype=np.int64)
    bounds.sort(axis=1)
    return bounds


def time_queries(index: SupsIndex, intervals: NDArray[np.int64]) -> float:
    """Answer every interval and return the throughput in queries per second."""

    start = time.perf_counter()
    for s, t in intervals.tolist():
        query(index, s, t)
    elapsed = time.perf_counter() - start
    return len(intervals) / elapsed if elapsed > 0 else float("inf")


def run_bench(config: CliConfig, output: TextIO | None = None) -> int:
    """Run the scaling benchmark and write the CSV rows.

    Args:
        config: The command configuration, providing the seed and limits.
        output: Stream for the CSV rows, standard output by default.

    Returns:
        0 if the index size was independent of the exponent scale for every ``m`` and
        1 otherwise. Build time ratios above the limit are only reported as warnings,
        since timings depend on the machine load.
    """

    output = sys.stdout if output is None else output
    limits = config.limits
    rng = np.random.default_rng(config.seed)
    base_scale = min(limits.bench_exp_scales)
    independent = True

    writer = csv.writer(output, lineterminator="\n")
    writer.writerow(CSV_FIELDS)

    for m in limits.bench_m:
        base = random_rle(rng, m, base_scale, limits.max_alphabet)
        build_ms: dict[int, float] = {}
        index_bytes: dict[int, int] = {}

        for scale in limits.bench_exp_scales:
            rle = scale_exponents(base, scale // base_scale)

            start = time.perf_counter()
            index = build_index(rle)
            build_ms[scale] = (time.perf_counter() - start) * 1000
            index_bytes[scale] = index.index_bytes

            throughput = time_queries(
                index, random_intervals(rng, rle.n, limits.bench_queries)
            )
            writer.writerow(
                (
                    m,
                    scale,
                    rle.n,
                    f"{build_ms[scale]:.3f}",
                    index_bytes[scale],
                    f"{throughput:.1f}",
                )
            )

        if len(set(index_bytes.values())) > 1:
            LOGGER.error(f" ✗ m={m}: index size depends on n: {index_bytes}")
            independent = False
        else:
            LOGGER.info(f" ✓ m={m}: index size independent of n")

        fastest = min(build_ms.values())
        if fastest > 0 and max(build_ms.values()) / fastest > BUILD_RATIO_LIMIT:
            LOGGER.warning(
                f" ! m={m}: build time ratio across scales exceeds "
                f"{BUILD_RATIO_LIMIT:g}"
            )

    return 0 if independent else 1
