"""Global objects for the run-length encoded SUPS index."""

import logging

logging.basicConfig(
    level=logging.INFO,
    format="%(message)s",
)

LOGGER = logging.getLogger("rle_sups")


class MalformedRleError(ValueError):
    """A run sequence or RLE file does not describe a canonical run-length encoding."""


class QueryDomainError(ValueError):
    """A query interval lies outside the decompressed string or is reversed."""


class IndexInvariantError(RuntimeError):
    """An internal invariant of index construction or querying has been broken."""
