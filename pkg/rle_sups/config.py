"""Tools to define and load the command line configuration.

The verification and benchmark limits can be overridden from a YAML file. Unless a file
is named on the command line, the tool looks for ``config.yaml`` in the platform user
configuration directory for ``rle_sups`` and falls back to the defaults below.
"""

from dataclasses import field
from pathlib import Path
from typing import ClassVar, Literal

import platformdirs
import yaml
from marshmallow import Schema, validate
from marshmallow.exceptions import ValidationError
from marshmallow_dataclass import dataclass

DEFAULT_SEED = 20190213
"""Fixed seed used when none is given, so that campaigns are reproducible."""

ALPHABET = "abcdefghijklmnopqrstuvwxyz"
"""Symbols drawn by the random string generators, in order."""


def _all_positive(values: list[int]) -> None:
    if any(value < 1 for value in values):
        raise ValidationError("All entries must be at least 1.")


POSITIVE_LIST = validate.And(validate.Length(min=1), _all_positive)


@dataclass
class Limits:
    """Limits for the verification and benchmark campaigns."""

    max_m: int = field(default=30, metadata={"validate": validate.Range(min=1)})
    max_exponent: int = field(default=5, metadata={"validate": validate.Range(min=1)})
    max_alphabet: int = field(
        default=4, metadata={"validate": validate.Range(min=2, max=len(ALPHABET))}
    )
    case_count: int = field(default=1000, metadata={"validate": validate.Range(min=0)})
    exhaustive_max_length: int = field(
        default=12, metadata={"validate": validate.Range(min=0, max=20)}
    )
    bench_m: list[int] = field(
        default_factory=lambda: [1000, 10000, 100000],
        metadata={"validate": POSITIVE_LIST},
    )
    bench_exp_scales: list[int] = field(
        default_factory=lambda: [10, 1000000000],
        metadata={"validate": POSITIVE_LIST},
    )
    bench_queries: int = field(
        default=1000000, metadata={"validate": validate.Range(min=1)}
    )
    workers: int = field(default=1, metadata={"validate": validate.Range(min=1)})

    Schema: ClassVar[type[Schema]]


@dataclass
class CliConfig:
    """The settings for one run of a ``sups`` subcommand."""

    subcommand: Literal["build-query", "verify", "bench"]
    input_format: Literal["plain", "rle"] = "plain"
    input_path: str | None = None
    queries_path: str | None = None
    seed: int = DEFAULT_SEED
    check_inner_occurrences: bool = True
    limits: Limits = field(default_factory=Limits)

    Schema: ClassVar[type[Schema]]


def default_config_path() -> Path:
    """The platform specific location of the user configuration file."""
    return platformdirs.user_config_path(appname="rle_sups") / "config.yaml"


def load_limits(config_file: Path | None = None) -> Limits:
    """Load campaign limits from a YAML file.

    The file contains a mapping of ``Limits`` fields to override. If ``config_file`` is
    None, the default configuration path is used if it exists and the default limits
    are returned otherwise.

    Args:
        config_file: An optional path to a YAML configuration file.

    Raises:
        ValueError: if a named file is missing, is not valid YAML or does not match
            the Limits schema.
    """

    if config_file is None:
        config_file = default_config_path()
        if not config_file.exists():
            return Limits()
    elif not config_file.exists():
        raise ValueError(f"Configuration file not found: {config_file}")

    with open(config_file) as cfp:
        try:
            config_data = yaml.safe_load(cfp)
        except yaml.YAMLError as excep:
            raise ValueError("Error reading configuration YAML: " + str(excep))

    try:
        limits: Limits = Limits.Schema().load(data=config_data or {})
    except ValidationError as excep:
        raise ValueError("Invalid configuration data: " + str(excep))

    return limits
