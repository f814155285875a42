"""
Worker-pool helper used by the analysis and search modules.
"""

from multiprocessing import Pool, cpu_count
from typing import Callable, Iterable, List, Optional, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def resolve_threads(threads: Optional[int]) -> int:
    """None or 0 means one worker per CPU; negative values are treated as 1."""
    if threads is None or threads == 0:
        return cpu_count()
    return max(1, threads)


def map_in_workers(func: Callable[[T], R], items: Iterable[T], threads: Optional[int] = 1) -> List[R]:
    """
    Map func over items, in a process pool when more than one worker is allowed.

    Results keep the input order, so callers can merge them deterministically.
    func must be picklable (a module-level function or a functools.partial of one).
    """
    work_items = list(items)
    workers = min(resolve_threads(threads), len(work_items))
    if workers <= 1:
        return [func(item) for item in work_items]
    chunksize = max(1, len(work_items) // (workers * 4))
    with Pool(processes=workers) as pool:
        return pool.map(func, work_items, chunksize=chunksize)
