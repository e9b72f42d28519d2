"""Top-level enumeration and counting of event structures over {0..n-1}.

Event structures are produced lazily, one causality poset at a time, so
enumeration never holds more than one poset's conflicts in memory, and
counting never materializes structures at all.  Counting can fan out
across worker processes; enumeration stays sequential and deterministic
(posets in enumeration order, conflicts in extension order).
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, NamedTuple

from . import conflicts, order_enum
from .relations import BoolMatrix, EventStructure, matrix_to_rel

ProgressFn = Callable[[int, "int | None"], None]

_BATCH_SIZE = 1024


class CountRow(NamedTuple):
    n: int
    preorders: int
    posets: int
    event_structures: int


@dataclass(frozen=True)
class CountTable:
    """Per-n counts, indexed by consecutive n starting at 0."""

    rows: tuple[CountRow, ...]


def enumerate_event_structures(n: int) -> Iterator[EventStructure]:
    """Yield every event structure over {0..n-1}, without repetition."""
    active = (1 << n) - 1
    for rows in order_enum._poset_rows(n):
        causality = matrix_to_rel(BoolMatrix(n, rows))
        for conf in conflicts._conflicts_packed(rows, n, active):
            yield EventStructure(causality, conflicts._unpack_conflict(conf, n))


def count_event_structures(
    n: int, *, workers: int = 1, progress: ProgressFn | None = None
) -> int:
    """Number of event structures over {0..n-1}.

    workers > 1 partitions the poset list across processes; the sum is
    exact and independent of scheduling.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    total_posets = _posets_total_if_cheap(n) if progress is not None else None
    if workers == 1:
        return _count_sequential(n, progress, total_posets)

    active = (1 << n) - 1
    total = 0
    done = 0
    batches = ((n, active, batch) for batch in _batched(order_enum._poset_rows(n)))
    with multiprocessing.Pool(workers) as pool:
        for subtotal, size in pool.imap_unordered(_count_batch, batches):
            total += subtotal
            done += size
            if progress is not None:
                progress(done, total_posets)
    return total


def count_event_structures_variant(
    n: int,
    *,
    dedupe: str = "final",
    pivot: str = "heuristic",
    progress: ProgressFn | None = None,
) -> int:
    """Sequential count under a chosen dedupe placement and pivot strategy.

    All variants return the same number; they differ only in how much
    duplicate work the recursion performs, which is what the bench
    command measures.
    """
    heuristic = conflicts._heuristic(pivot)
    total_posets = _posets_total_if_cheap(n) if progress is not None else None
    active = (1 << n) - 1
    total = 0
    done = 0
    for rows in order_enum._poset_rows(n):
        total += conflicts._count_packed(
            rows, n, active, heuristic=heuristic, dedupe=dedupe
        )
        done += 1
        if progress is not None and done % _BATCH_SIZE == 0:
            progress(done, total_posets)
    if progress is not None:
        progress(done, total_posets)
    return total


def counts_up_to(max_n: int) -> CountTable:
    """Preorder, poset and event-structure counts for every n in 0..max_n."""
    out = []
    for k in range(max_n + 1):
        preorders = order_enum.count_preorders(k)
        active = (1 << k) - 1
        posets = 0
        structures = 0
        for rows in order_enum._poset_rows(k):
            posets += 1
            structures += conflicts._count_packed(rows, k, active)
        out.append(CountRow(k, preorders, posets, structures))
    return CountTable(tuple(out))


def _count_sequential(n: int, progress: ProgressFn | None, total_posets: int | None) -> int:
    active = (1 << n) - 1
    total = 0
    done = 0
    for rows in order_enum._poset_rows(n):
        total += conflicts._count_packed(rows, n, active)
        done += 1
        if progress is not None and done % _BATCH_SIZE == 0:
            progress(done, total_posets)
    if progress is not None:
        progress(done, total_posets)
    return total


def _count_batch(args) -> tuple[int, int]:
    n, active, batch = args
    return (
        sum(conflicts._count_packed(rows, n, active) for rows in batch),
        len(batch),
    )


def _batched(items: Iterable, size: int = _BATCH_SIZE) -> Iterator[list]:
    batch = []
    for item in items:
        batch.append(item)
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


def _posets_total_if_cheap(n: int) -> int | None:
    # Beyond the cache ceiling a count would re-run the whole stream.
    if n <= order_enum._CACHE_MAX_ORDER:
        return order_enum.count_posets(n)
    return None
