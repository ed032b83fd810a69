"""Parallel sweep executor with deterministic result order."""

import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, Dict, List, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class SweepService:
    """Runs independent work items serially or on a process pool.

    Results always come back in input order, whatever the completion order.
    """

    def __init__(self, workers: int = 1, progress_every: int = 100):
        self.workers = max(1, workers)
        self.progress_every = progress_every

    def map(self, func: Callable[[T], R], items: Sequence[T], label: str = "sweep") -> List[R]:
        total = len(items)
        if self.workers <= 1 or total <= 1:
            results = []
            for idx, item in enumerate(items, 1):
                results.append(func(item))
                self._progress(label, idx, total)
            return results

        logger.info("%s: %d items on %d workers", label, total, self.workers)
        collected: Dict[int, R] = {}
        with ProcessPoolExecutor(max_workers=self.workers) as executor:
            futures = {executor.submit(func, item): idx for idx, item in enumerate(items)}
            for done, future in enumerate(as_completed(futures), 1):
                collected[futures[future]] = future.result()
                self._progress(label, done, total)
        return [collected[idx] for idx in range(total)]

    def _progress(self, label: str, done: int, total: int) -> None:
        if done % self.progress_every == 0 or done == total:
            logger.info("%s: %d/%d", label, done, total)
