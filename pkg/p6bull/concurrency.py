from typing import Callable, List, Sequence, TypeVar

import anyio
from anyio import CapacityLimiter, to_process, to_thread

_T = TypeVar("_T")
_R = TypeVar("_R")


async def _run_all(func: Callable[[_T], _R], items: Sequence[_T], workers: int, processes: bool) -> List[_R]:
    # each task writes its own slot, so results come back in submission order
    results: List[_R] = [None] * len(items)  # type: ignore[list-item]
    limiter = CapacityLimiter(workers)

    async def run(index: int, item: _T) -> None:
        if processes:
            results[index] = await to_process.run_sync(func, item, limiter=limiter)
        else:
            results[index] = await to_thread.run_sync(func, item, limiter=limiter)

    async with anyio.create_task_group() as tg:
        for index, item in enumerate(items):
            tg.start_soon(run, index, item)

    return results


def run_in_workers(
    func: Callable[[_T], _R],
    items: Sequence[_T],
    workers: int = 1,
    processes: bool = False,
) -> List[_R]:
    '''
        Applies func to every item on up to `workers` workers and returns the results in item order.

        Threads only overlap I/O. CPU-bound work such as a difftest campaign needs `processes=True`,
        which runs func in anyio worker processes; func, the items and the results must then pickle,
        so func has to be a module-level function or a partial of one.
    '''
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    return anyio.run(_run_all, func, items, workers, processes)
