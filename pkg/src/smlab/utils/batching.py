"""Ordered batch execution with optional threads and progress bar."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Sequence, TypeVar

from rich.progress import Progress, SpinnerColumn, TextColumn, BarColumn, TaskProgressColumn

log = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def chunked(items: Sequence[T], size: int) -> list[Sequence[T]]:
    """Split *items* into consecutive chunks of at most *size*."""
    return [items[i:i + size] for i in range(0, len(items), max(1, size))]


def run_ordered(
    fn: Callable[[T], R],
    items: Sequence[T],
    *,
    threads: int = 1,
    show_progress: bool = False,
    description: str = "Working...",
) -> list[R]:
    """Apply *fn* to every item and return the results in input order.

    With ``threads > 1`` the calls run in a thread pool; the order of the
    returned list never depends on scheduling.
    """
    count = len(items)
    log_interval = max(1, count // 10)
    results: list[R] = []

    def _consume(iterator, advance: Callable[[], None]) -> None:
        for i, result in enumerate(iterator):
            results.append(result)
            advance()
            if (i + 1) % log_interval == 0 or (i + 1) == count:
                log.debug("%s %d/%d", description, i + 1, count)

    with ThreadPoolExecutor(max_workers=threads) if threads > 1 else _NoPool() as pool:
        iterator = pool.map(fn, items)
        if show_progress:
            with Progress(
                SpinnerColumn(),
                TextColumn("[progress.description]{task.description}"),
                BarColumn(),
                TaskProgressColumn(),
            ) as progress:
                task = progress.add_task(description, total=count)
                _consume(iterator, lambda: progress.update(task, advance=1))
        else:
            _consume(iterator, lambda: None)
    return results


class _NoPool:
    """Serial stand-in with the executor's ``map`` interface."""

    def __enter__(self) -> _NoPool:
        return self

    def __exit__(self, *exc) -> None:
        return None

    def map(self, fn, items):
        return map(fn, items)
