"""Test for the exhaustive sweeps."""
from symdiet.composition import make_composition
from symdiet.sweep import __CPU_count__
from symdiet.sweep import get_chunks
from symdiet.sweep import iter_task
from symdiet.sweep import run_sweep
from symdiet.sweep import sweep_tasks
from symdiet.sweep import VerificationReport
from symdiet.sweep import verify_recursion
from symdiet.sweep.config import ConfigSweep


def test_get_chunks():
    assert get_chunks([1, 2, 3, 4, 5], 2) == [[1, 2, 3], [4, 5]]
    assert get_chunks([1, 2, 3], 1) == [[1, 2, 3]]
    # never more chunks than items
    assert get_chunks([1, 2], 5) == [[1], [2]]

    items = list(range(100))
    chunks = get_chunks(items, -1)
    assert len(chunks) == min(__CPU_count__, 100)
    assert [x for chunk in chunks for x in chunk] == items


def test_sweep_tasks():
    assert sweep_tasks(3) == [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3)]
    assert sweep_tasks(3, length=3) == [(3, 1), (3, 2), (3, 3)]

    parts = [p for task in sweep_tasks(4) for p in iter_task(task)]
    assert len(parts) == 15
    assert parts[:4] == [(1,), (1, 1), (2,), (1, 1, 1)]

    parts = [p for task in sweep_tasks(5, 2) for p in iter_task(task, 2)]
    assert all(len(p) == 2 for p in parts)
    assert len(parts) == 1 + 2 + 3 + 4


def _count(chunk):
    return sum(1 for task in chunk for _ in iter_task(task))


def test_run_sweep_keeps_chunk_order():
    tasks = sweep_tasks(8)
    serial = run_sweep(_count, tasks)
    assert sum(serial) == 2**8 - 1

    config = ConfigSweep(n_jobs=3, backend="threading")
    parallel = run_sweep(_count, tasks, config)
    assert len(parallel) == 3
    assert sum(parallel) == 2**8 - 1


def test_verify_recursion():
    report = verify_recursion(1)
    assert report.checked == 1
    assert report.passed
    assert str(report) == "checked 1 compositions, 0 mismatches"

    report = verify_recursion(4)
    assert report.checked == 15
    assert str(report) == "checked 15 compositions, 0 mismatches"

    report = verify_recursion(12, ConfigSweep(n_jobs=2, backend="threading"))
    assert report.checked == 2**12 - 1
    assert report.mismatches == ()
    assert report.json() == {"max_sum": 12, "checked": 4095, "mismatches": []}


def test_verification_report():
    report = VerificationReport(
        max_sum=5, checked=31, mismatches=[make_composition((2, 3))]
    )
    assert not report.passed
    assert str(report) == "checked 31 compositions, 1 mismatches"
    assert report.json()["mismatches"] == [[2, 3]]
