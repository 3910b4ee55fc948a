from __future__ import annotations

import os
import time
from typing import Callable, TypeVar

from sanic.log import logger

T = TypeVar("T")

THREADS_ENV = "NCFREE_THREADS"


def timed_supplier(supplier: Callable[[], T]) -> Callable[[], tuple[T, float]]:
    def wrapper():
        start = time.time()
        result = supplier()
        duration = time.time() - start
        return result, duration

    return wrapper


def default_thread_count() -> int:
    return min(4, os.cpu_count() or 1)


def thread_count() -> int:
    """
    Worker count for sample loops. `NCFREE_THREADS` overrides it; invalid values are
    ignored.
    """
    default = default_thread_count()
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return default
    try:
        cap = int(raw)
    except ValueError:
        logger.warning(f"Ignoring {THREADS_ENV}={raw!r}: not an integer")
        return default
    if cap < 1:
        logger.warning(f"Ignoring {THREADS_ENV}={raw!r}: must be at least 1")
        return default
    return cap
