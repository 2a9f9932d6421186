#!/usr/bin/env python3
"""
Base runner module providing shared functionality for the pneufab commands.

Features:
- Logging setup (stderr, so stdout carries command output only)
- Argument parser factory
- Exit-code contract: 0 success, 1 error, 2 validation failure
- Single-line diagnostics for PneufabError and OSError
"""

import sentry_init  # noqa: F401 - must be first to capture errors
sentry_init.set_module("pneufab")
import sys
import logging
import argparse
from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Optional

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))
from config import LOG_LEVEL
from pneufab.errors import PneufabError

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FAILED = 2


class BaseRunner(ABC):
    """Base class for command-line runners.

    Subclasses implement ``run()`` and return an exit code.
    """

    # Override in subclasses
    RUNNER_NAME = "BaseRunner"

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.debug = getattr(args, 'debug', False)
        self.logger = self._setup_logging()

    def _setup_logging(self) -> logging.Logger:
        """Configure logging for the runner."""
        log_level = logging.DEBUG if self.debug else getattr(logging, LOG_LEVEL, logging.INFO)
        logging.basicConfig(
            level=log_level,
            format='%(asctime)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S',
            stream=sys.stderr,
        )
        logging.getLogger().setLevel(log_level)
        return logging.getLogger(self.RUNNER_NAME)

    def out(self, text: str = "") -> None:
        """Write command output to stdout."""
        sys.stdout.write(text if text.endswith("\n") else text + "\n")

    @abstractmethod
    def run(self) -> int:
        """
        Execute the runner.

        Returns:
            Process exit code
        """
        pass

    @classmethod
    def create_argument_parser(cls) -> argparse.ArgumentParser:
        """Create argument parser for the runner."""
        parser = argparse.ArgumentParser(description=cls.RUNNER_NAME)
        parser.add_argument(
            '--debug',
            action='store_true',
            help='Enable debug logging'
        )
        return parser

    @classmethod
    def execute(cls, argv: Optional[List[str]] = None) -> int:
        """Parse ``argv``, run, and map failures to exit codes."""
        parser = cls.create_argument_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return EXIT_OK if e.code == 0 else EXIT_ERROR

        try:
            runner = cls(args)
            return runner.run()
        except PneufabError as e:
            print(str(e), file=sys.stderr)
            return EXIT_ERROR
        except OSError as e:
            print(f"E_IO: {e.strerror or e}", file=sys.stderr)
            return EXIT_ERROR
        except Exception as e:
            logging.getLogger(cls.RUNNER_NAME).exception(f"{cls.RUNNER_NAME} failed: {e}")
            sentry_init.report(e, runner=cls.RUNNER_NAME, argv=" ".join(argv if argv is not None else sys.argv[1:]))
            print(f"E_INTERNAL: {e}", file=sys.stderr)
            return EXIT_ERROR

    @classmethod
    def main(cls) -> None:
        """Main entry point for the runner."""
        sys.exit(cls.execute())
