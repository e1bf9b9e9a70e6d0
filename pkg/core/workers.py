"""
Process pool that runs independent tasks and yields their results in submission order
"""
from __future__ import annotations

import logging
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, TypeVar

T = TypeVar("T")
R = TypeVar("R")

logger = logging.getLogger(__name__)


@dataclass
class OrderedWorkerPool:
    """
    Bounded pool of worker processes with an ordered merge buffer.

    At most ``window`` tasks are in flight. Results are held back until every
    earlier task has completed, so the output order never depends on scheduling.
    ``max_workers == 1`` runs inline without spawning processes.
    """

    max_workers: int = 1
    window: int | None = None

    def __post_init__(self):
        if self.max_workers < 1:
            raise ValueError("max_workers must be >= 1")
        if self.window is None:
            self.window = self.max_workers * 4
        if self.window < self.max_workers:
            raise ValueError("window must be >= max_workers")

    def map(self, func: Callable[[T], R], items: Iterable[T]) -> Iterator[R]:
        if self.max_workers == 1:
            for item in items:
                yield func(item)
            return

        pool = ProcessPoolExecutor(max_workers=self.max_workers)
        in_flight = {}
        ready = {}
        next_to_submit = 0
        next_to_emit = 0
        source = iter(items)
        exhausted = False
        try:
            while True:
                while not exhausted and len(in_flight) + len(ready) < self.window:
                    try:
                        item = next(source)
                    except StopIteration:
                        exhausted = True
                        break
                    in_flight[pool.submit(func, item)] = next_to_submit
                    next_to_submit += 1

                if not in_flight and not ready:
                    return

                if in_flight:
                    done, _ = wait(in_flight, return_when=FIRST_COMPLETED)
                    for future in done:
                        index = in_flight.pop(future)
                        # result() re-raises a worker failure here
                        ready[index] = future.result()

                while next_to_emit in ready:
                    yield ready.pop(next_to_emit)
                    next_to_emit += 1
        finally:
            for future in in_flight:
                future.cancel()
            pool.shutdown(wait=True, cancel_futures=True)
            logger.debug(f"Worker pool closed after {next_to_emit}/{next_to_submit} results")


def ordered_map(func: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> Iterator[R]:
    """Map func over items with ``jobs`` processes, preserving input order"""
    return OrderedWorkerPool(max_workers=jobs).map(func, items)
