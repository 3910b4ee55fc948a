from __future__ import annotations

import argparse
from dataclasses import dataclass

from util import default_thread_count


@dataclass
class ServerConfig:
    port: int
    """Port to run the server on."""

    host: str
    """
    Interface to bind to.

    Usage: `--host 0.0.0.0`
    """

    threads: int
    """
    Worker threads for running operations.

    Usage: `--threads 2`
    """

    close_after_start: bool
    """
    Whether to close the server after starting it.

    This is useful for testing the server.

    Usage: `--close-after-start`
    """

    @staticmethod
    def parse_argv(argv: list[str] | None = None) -> ServerConfig:
        parser = argparse.ArgumentParser(description="ncfree operation server.")
        parser.add_argument(
            "port",
            type=int,
            nargs="?",
            default=8000,
            help="Port to run the server on.",
        )
        parser.add_argument(
            "--host",
            type=str,
            default="127.0.0.1",
            help="Interface to bind to.",
        )
        parser.add_argument(
            "--threads",
            type=int,
            default=default_thread_count(),
            help="Worker threads for running operations.",
        )
        parser.add_argument(
            "--close-after-start",
            action="store_true",
            help="Close the server after starting. Useful for CI.",
        )

        parsed = parser.parse_args(argv)
        if parsed.threads < 1:
            parser.error("--threads must be at least 1")

        return ServerConfig(
            port=parsed.port,
            host=parsed.host,
            threads=parsed.threads,
            close_after_start=parsed.close_after_start,
        )
