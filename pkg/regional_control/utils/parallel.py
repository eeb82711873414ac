"""Chunked thread-pool helpers for write-disjoint numpy work."""

from __future__ import annotations

from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

T = TypeVar("T")
R = TypeVar("R")

_MIN_CHUNK = 1 << 12


def chunk_ranges(total: int, chunks: int) -> list[tuple[int, int]]:
    """Split ``[0, total)`` into at most ``chunks`` contiguous ranges."""
    if total <= 0:
        return []
    chunks = max(1, min(chunks, total))
    step = -(-total // chunks)
    return [(start, min(start + step, total)) for start in range(0, total, step)]


def run_chunked(
    worker: Callable[[int, int], R],
    total: int,
    *,
    workers: int = 1,
    min_chunk: int = _MIN_CHUNK,
    max_chunk: int | None = None,
) -> list[R]:
    """
    Apply ``worker(start, stop)`` over ``[0, total)`` and return results in range order.

    Small jobs run inline; larger ones are spread over a thread pool. numpy
    releases the GIL inside its kernels, so threads give real speed-ups for
    the vectorised evolution used by callers.

    :param max_chunk: Upper bound on a single range, bounding peak memory
        even when running inline.
    """
    parallel = workers > 1 and total > min_chunk
    chunks = workers * 4 if parallel else 1
    if max_chunk is not None:
        chunks = max(chunks, -(-total // max_chunk))
    ranges = chunk_ranges(total, chunks)
    if not parallel or len(ranges) == 1:
        return [worker(start, stop) for start, stop in ranges]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(worker, start, stop) for start, stop in ranges]
        return [future.result() for future in futures]


def map_items(worker: Callable[[T], R], items: Sequence[T], *, workers: int = 1) -> list[R]:
    """Apply ``worker`` to each item, concurrently when ``workers > 1``, keeping order."""
    if workers <= 1 or len(items) <= 1:
        return [worker(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(worker, items))


__all__ = ["chunk_ranges", "run_chunked", "map_items"]
