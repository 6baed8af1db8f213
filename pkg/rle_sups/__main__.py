"""Run the command line interface with ``python -m rle_sups``."""

import sys

from rle_sups.entry_points import sups_cli

if __name__ == "__main__":
    sys.exit(sups_cli())
