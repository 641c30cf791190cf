# -*- coding: utf-8 -*-

from cyclac.config import get_config, get_logger
from typing import Any, Callable, List, Optional, Sequence
import threading


# module setup {{{

logger = get_logger(__name__)

# }}}


class WorkerManager():
    """ Manages worker threads for independent evaluations

    Items are split into contiguous chunks, one thread per chunk. Each thread writes its
    results into its own slots of a shared result list, so the merged output is in input order
    and identical to running `func` sequentially.

    The counting loops are pure Python and hold the GIL, so more threads do not make them
    faster; the worker count changes scheduling only, never results.

    .. Example::
        with WorkerManager(4) as wm:
            counts = wm.map(count, representatives)
    """

    def __init__(self, workers: Optional[int] = None) -> None:
        self._workers = get_config().workers if workers is None else workers
        if self._workers < 1:
            raise ValueError(f"workers must be positive, got {self._workers}")
        self._threads: List[threading.Thread] = []
        self._errors: List[BaseException] = []
        self._lock = threading.Lock()

    @property
    def workers(self) -> int:
        return self._workers

    def __enter__(self):
        """ context manager enter
        """
        self.start()
        return self

    def start(self):
        self._threads = []
        self._errors = []

    def map(self, func: Callable[[Any], Any], items: Sequence[Any]) -> List[Any]:
        """ apply func to every item; results in input order

            the first exception raised by any worker is re-raised here once all threads joined
        """
        items = list(items)
        if self._workers == 1 or len(items) < 2:
            return [func(item) for item in items]
        results: List[Any] = [None] * len(items)
        nthreads = min(self._workers, len(items))
        size, extra = divmod(len(items), nthreads)
        start = 0
        self.start()
        for n in range(nthreads):
            stop = start + size + (1 if n < extra else 0)
            thread = threading.Thread(target=self._run_chunk, args=(func, items, results, start, stop))
            self._threads.append(thread)
            thread.start()
            start = stop
        self.stop()
        if self._errors:
            raise self._errors[0]
        return results

    def _run_chunk(self, func, items, results, start, stop):
        try:
            for i in range(start, stop):
                results[i] = func(items[i])
        except BaseException as e:
            logger.error(f"worker failed on items [{start}, {stop}): {e}")
            with self._lock:
                self._errors.append(e)

    def __exit__(self, typ, value, traceback):
        """ context manager exit
        """
        self.stop()

    def stop(self):
        """ wait for all threads to finish
        """
        for thread in self._threads:
            thread.join()
        self._threads = []
