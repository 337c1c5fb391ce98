"""Command line entry point.

Usage::

    heatedstring <command> --config <path> [--out <dir>] [--seed <int>] [--log-level <level>]

Exit status: 0 success, 1 usage or configuration error, 2 acceptance failure, 3 numerical failure.
"""

import argparse
import logging
import os
import sys
from typing import List, NoReturn, Optional

from heatedstring.analysis.commands import COMMANDS
from heatedstring.analysis.config import load_config
from heatedstring.exceptions import AcceptanceError, ConfigError, HeatedStringError

LOG_LEVEL_ENV = "HEATEDSTRING_LOG_LEVEL"
"""Environment variable selecting the log level when --log-level is not given."""

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ACCEPTANCE = 2
EXIT_NUMERICAL = 3

logger = logging.getLogger("heatedstring.analysis.cli")


class _ArgumentParser(argparse.ArgumentParser):
    """argparse parser that exits with the usage status instead of 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    """Parser for the heatedstring command line."""
    parser = _ArgumentParser(prog="heatedstring", description="Heated string spectral lab.")
    parser.add_argument("command", choices=sorted(COMMANDS), help="Experiment to run.")
    parser.add_argument("--config", required=True, help="Experiment configuration file.")
    parser.add_argument("--out", default=None, help="Output directory; overrides [output] directory.")
    parser.add_argument("--seed", type=int, default=None, help="Overrides [initial] seed.")
    parser.add_argument(
        "--log-level",
        default=None,
        choices=LOG_LEVELS,
        help=f"Log level; defaults to ${LOG_LEVEL_ENV} or WARNING.",
    )
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command and return its exit status."""
    args = build_parser().parse_args(argv)
    level = args.log_level or os.environ.get(LOG_LEVEL_ENV, "WARNING").upper()
    if level not in LOG_LEVELS:
        level = "WARNING"
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")
    try:
        config = load_config(args.config, seed=args.seed, out_dir=args.out)
        logger.info("%s: config %s, output in %s", args.command, config.source, config.out_dir)
        result = COMMANDS[args.command](config)
    except ConfigError as exc:
        logger.error("configuration error: %s", exc)
        return EXIT_USAGE
    except AcceptanceError as exc:
        logger.error("%s", exc)
        return EXIT_ACCEPTANCE
    except HeatedStringError as exc:
        logger.error("numerical failure in %s: %s", args.command, exc)
        return EXIT_NUMERICAL
    for path in result.outputs:
        logger.info("wrote %s", path)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
