from __future__ import annotations

import time

from util import THREADS_ENV, default_thread_count, thread_count, timed_supplier


def test_timed_supplier():
    def supplier() -> str:
        time.sleep(0.01)
        return "done"

    result, duration = timed_supplier(supplier)()
    assert result == "done"
    assert duration >= 0.005


def test_thread_count_default(monkeypatch):
    monkeypatch.delenv(THREADS_ENV, raising=False)
    assert thread_count() == default_thread_count()
    assert 1 <= default_thread_count() <= 4


def test_thread_count_override(monkeypatch):
    monkeypatch.setenv(THREADS_ENV, "7")
    assert thread_count() == 7


def test_thread_count_ignores_invalid_values(monkeypatch):
    for raw in ("zero", "0", "-2", " "):
        monkeypatch.setenv(THREADS_ENV, raw)
        assert thread_count() == default_thread_count()
