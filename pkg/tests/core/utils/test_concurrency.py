import threading
import time

import pytest

from edaha.core.utils.concurrency import CheckPool, WorkerTask


def test_results_come_back_in_submission_order():
    def slow_square(n):
        time.sleep(0.01 * (5 - n))
        return n * n

    with CheckPool(max_workers=4, name="test") as pool:
        assert pool.map_ordered(slow_square, range(5)) == [0, 1, 4, 9, 16]


def test_single_worker_runs_inline():
    with CheckPool(max_workers=1) as pool:
        threads = pool.map_ordered(lambda _: threading.current_thread(), range(3))
    assert set(threads) == {threading.current_thread()}


def test_task_errors_propagate():
    def explode(n):
        if n == 2:
            raise ArithmeticError("bad residual")
        return n

    with CheckPool(max_workers=3) as pool:
        with pytest.raises(ArithmeticError):
            pool.map_ordered(explode, range(4))


def test_worker_task_records_outcome():
    task = WorkerTask(0, lambda x: x + 1, 1)
    assert not task.completed()
    assert task.execute() == 2
    assert task.completed()
    assert task.result == 2
    assert task.exception is None


def test_shutdown_is_idempotent():
    pool = CheckPool(max_workers=2)
    pool.start()
    pool.shutdown()
    pool.shutdown()
