"""
Thread pool utilities for running independent verification checks.

Checks are pure functions of immutable values, so they can run on any thread.
Results are always handed back in submission order so that reports built from
them do not depend on scheduling.
"""

import logging
import threading
from concurrent.futures import Future, ThreadPoolExecutor
from typing import Any, Callable, Generic, Iterable, List, Optional, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class WorkerTask(Generic[R]):
    """A single unit of work with its submission index."""

    def __init__(self, index: int, func: Callable[..., R], *args: Any, **kwargs: Any):
        self.index = index
        self.func = func
        self.args = args
        self.kwargs = kwargs
        self._completed = threading.Event()
        self._exception: Optional[BaseException] = None
        self._result: Optional[R] = None

    def execute(self) -> Optional[R]:
        try:
            self._result = self.func(*self.args, **self.kwargs)
            return self._result
        except Exception as e:
            self._exception = e
            logger.error(f"Task {self.index} failed: {e}")
            raise
        finally:
            self._completed.set()

    def completed(self) -> bool:
        return self._completed.is_set()

    @property
    def exception(self) -> Optional[BaseException]:
        return self._exception

    @property
    def result(self) -> Optional[R]:
        return self._result


class CheckPool:
    """
    Runs independent checks on a thread pool and collects them in order.

    With ``max_workers == 1`` tasks run inline on the calling thread, which keeps
    tracebacks simple when debugging a single failing identity.
    """

    def __init__(self, max_workers: int = 4, name: Optional[str] = None):
        self.max_workers = max_workers
        self.name = name or self.__class__.__name__
        self._executor: Optional[ThreadPoolExecutor] = None
        self._lock = threading.RLock()

    def start(self) -> None:
        with self._lock:
            if self._executor is not None:
                logger.warning(f"Pool {self.name} is already started")
                return
            if self.max_workers > 1:
                self._executor = ThreadPoolExecutor(
                    max_workers=self.max_workers,
                    thread_name_prefix=f"{self.name}-worker",
                )
            logger.debug(f"Started check pool {self.name} ({self.max_workers} workers)")

    def shutdown(self, wait: bool = True) -> None:
        with self._lock:
            if self._executor is None:
                return
            self._executor.shutdown(wait=wait, cancel_futures=not wait)
            self._executor = None
            logger.debug(f"Check pool {self.name} shut down")

    def map_ordered(self, func: Callable[[T], R], items: Iterable[T]) -> List[R]:
        """
        Apply ``func`` to every item and return the results in input order.

        Exceptions raised by a task propagate to the caller after all tasks of
        the batch have been waited for.
        """
        tasks = [WorkerTask(i, func, item) for i, item in enumerate(items)]
        if self._executor is None:
            return [task.execute() for task in tasks]  # type: ignore[misc]

        futures: List[Future] = [self._executor.submit(task.execute) for task in tasks]
        first_error: Optional[BaseException] = None
        for future in futures:
            error = future.exception()
            if error is not None and first_error is None:
                first_error = error
        if first_error is not None:
            raise first_error
        return [task.result for task in sorted(tasks, key=lambda t: t.index)]  # type: ignore[misc]

    def __enter__(self) -> "CheckPool":
        self.start()
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        self.shutdown(wait=True)
