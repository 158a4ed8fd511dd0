"""Exhaustive sweeps over compositions, fanned out over joblib workers."""
from typing import Callable
from typing import List
from typing import Optional
from typing import Sequence
from typing import Tuple

import psutil
from joblib import delayed
from joblib import Parallel
from symdiet.composition import Composition
from symdiet.oracle import brute_cycle_lengths
from symdiet.oracle import iter_compositions
from symdiet.recursion import count_parts_orbits
from symdiet.sweep.config import ConfigSweep
from symdiet.utils.parseable import Parseable

__all__ = [
    "ConfigSweep",
    "VerificationReport",
    "get_chunks",
    "run_sweep",
    "verify_recursion",
]

__CPU_count__ = psutil.cpu_count()


def get_chunks(items_list, n_jobs):
    """Return the chunks of a list into roughly n_jobs equal chunks.

    Args:
        (list) items_list: The input list to divide into n_jobs chunks.
        (int) n_jobs: Number of chunks of input list. A negative value counts back
            from the number of CPUs.

    Example:
        >>> get_chunks([1, 2, 3, 4, 5], 2)
        [[1, 2, 3], [4, 5]]
    """
    if n_jobs < 0:
        n_jobs += __CPU_count__ + 1
    n_jobs = max(1, min(n_jobs, len(items_list)))
    list_len = len(items_list)
    n_blocks, n_left = list_len // n_jobs, list_len % n_jobs

    chunks = [0] + [n_blocks] * n_jobs
    for i in range(n_left):
        chunks[i + 1] += 1

    for i in range(1, n_jobs + 1):
        chunks[i] += chunks[i - 1]
    slices = [slice(chunks[i], chunks[i + 1], None) for i in range(n_jobs)]
    return [items_list[item] for item in slices]


def sweep_tasks(max_sum: int, length: Optional[int] = None) -> List[Tuple[int, int]]:
    """Split the compositions of every sum in [1, max_sum] into tasks (n, first),
    the compositions of n starting with the part ``first``. The tasks are in the
    order of the stream of compositions."""
    low = 1 if length is None else length
    return [(n, first) for n in range(low, max_sum + 1) for first in range(1, n + 1)]


def iter_task(task: Tuple[int, int], length: Optional[int] = None):
    """Iterate over the part tuples of one task."""
    n, first = task
    rest_length = None if length is None else length - 1
    for rest in iter_compositions(n - first, rest_length):
        yield (first,) + rest


def run_sweep(func: Callable, tasks: Sequence, config: ConfigSweep = None, **kwargs):
    """Evaluate ``func(chunk, **kwargs)`` over chunks of the tasks and return the
    list of results, in the order of the chunks regardless of the scheduling."""
    config = ConfigSweep() if config is None else config
    chunks = get_chunks(list(tasks), config.n_jobs)
    jobs = (delayed(func)(chunk, **kwargs) for chunk in chunks)
    return Parallel(
        n_jobs=config.n_jobs, verbose=config.verbose, backend=config.backend
    )(jobs)


class VerificationReport(Parseable):
    """The result of the comparison of the orbit counting recursion against the
    brute force traversal.

    Arguments:
        int max_sum: The sum bound.
        int checked: The number of compositions checked.
        tuple mismatches: The compositions where the two counts differ.
    """

    max_sum: int
    checked: int
    mismatches: Tuple[Composition, ...] = ()

    @property
    def passed(self) -> bool:
        return len(self.mismatches) == 0

    def __str__(self):
        return f"checked {self.checked} compositions, {len(self.mismatches)} mismatches"


def _verify_chunk(chunk):
    checked = 0
    mismatches = []
    for task in chunk:
        for parts in iter_task(task):
            checked += 1
            if count_parts_orbits(parts) != len(brute_cycle_lengths(parts)):
                mismatches.append(parts)
    return checked, mismatches


def verify_recursion(max_sum: int, config: ConfigSweep = None) -> VerificationReport:
    """Compare the orbit count of the recursion with the brute force count, over
    every composition of every sum in [1, max_sum].

    Args:
        int max_sum: The sum bound, at least 1.
        ConfigSweep config: The sweep configuration.

    Example:
        >>> print(verify_recursion(4))
        checked 15 compositions, 0 mismatches
    """
    if max_sum < 1:
        raise ValueError(f"The sum bound must be at least 1, found {max_sum}.")
    results = run_sweep(_verify_chunk, sweep_tasks(max_sum), config)
    checked = sum(result[0] for result in results)
    mismatches = tuple(
        Composition.trusted(parts) for result in results for parts in result[1]
    )
    return VerificationReport.construct(
        max_sum=max_sum, checked=checked, mismatches=mismatches
    )
