from __future__ import annotations

import logging
import logging.config
import sys
from typing import Any

from sanic.log import LOGGING_CONFIG_DEFAULTS, logger

import commands  # noqa: F401
from documents import DocumentError, dump_document, read_document, write_document
from operations import Operation, registry, run_operation
from poincare import NotExact, NotInKernel

from .config import DOCUMENT_KINDS, EXIT_INVALID, EXIT_NO_SOLUTION, EXIT_OK, CliConfig


def load_documents(op: Operation, raw: dict[str, Any]) -> dict[str, Any]:
    """Replaces the file paths of document parameters by the parsed JSON."""
    inputs = dict(raw)
    for p in op.params:
        value = inputs.get(p.name)
        if value is None or p.kind not in DOCUMENT_KINDS:
            continue
        if isinstance(value, list):
            inputs[p.name] = [read_document(v) for v in value]
        else:
            inputs[p.name] = read_document(value)
    return inputs


def _logging_config() -> dict[str, Any]:
    """Sanic's defaults with every stream handler moved to stderr. stdout carries the result."""
    config = dict(LOGGING_CONFIG_DEFAULTS)
    config["handlers"] = {
        name: {**handler, "stream": "ext://sys.stderr"} if "stream" in handler else dict(handler)
        for name, handler in LOGGING_CONFIG_DEFAULTS["handlers"].items()
    }
    return config


def _configure_logging(verbose: bool) -> None:
    logging.config.dictConfig(_logging_config())
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)


def _fail(code: int, message: str) -> int:
    print(f"ncfree: error: {message}", file=sys.stderr)
    return code


def run(config: CliConfig) -> int:
    op = registry.get(config.operation)
    try:
        result = run_operation(op.name, load_documents(op, config.raw_inputs))
    except (NotExact, NotInKernel) as e:
        return _fail(EXIT_NO_SOLUTION, str(e))
    except (DocumentError, ValueError, OSError) as e:
        return _fail(EXIT_INVALID, str(e))
    except Exception as e:
        logger.error(e, exc_info=True)
        return _fail(EXIT_INVALID, f"{type(e).__name__}: {e}")

    if config.output_file is not None:
        write_document(result.document, config.output_file)
    elif config.output_format == "table":
        sys.stdout.write(result.render())
    else:
        sys.stdout.write(dump_document(result.document))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    config = CliConfig.parse_argv(registry, argv)
    _configure_logging(config.verbose)
    return run(config)
