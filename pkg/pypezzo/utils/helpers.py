import hashlib
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
import ujson


def defaultWorkers():
    """
    How many workers to use when the caller does not say. One per logical core.
    """
    return os.cpu_count() or 1


def mapSlices(func, items: list, workers: int = 1):
    """
    Run func over every item and return the results in submission order.
    With one worker everything runs in this process, otherwise a process pool is used.
    func and the items must be picklable when workers > 1, so pass module level functions or functools.partial objects.

    :param func: Callable applied to each item
    :param items: The work items, usually x1 slices of a box
    :param workers: Number of worker processes
    """
    items = list(items)
    if workers is None:
        workers = defaultWorkers()

    if workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    chunk = max(1, len(items) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items, chunksize=chunk))


def exactTotal(values):
    """
    Order independent sum of real partial results. Integers are summed exactly, floats through math.fsum.
    """
    values = list(values)
    if all(isinstance(v, int) for v in values):
        return sum(values)
    return math.fsum(values)


def stableHash(data: dict):
    """
    SHA-256 of the canonical JSON encoding of data. Used to tag reports with the configuration that produced them.

    :param data: Any JSON serializable dictionary
    """
    encoded = ujson.dumps(data, sort_keys=True, ensure_ascii=True)
    return hashlib.sha256(encoded.encode("utf-8")).hexdigest()


class phaseTimer(dict):
    """
    Records wall time per named phase. Subclasses dict so it serializes as-is.
    """

    @contextmanager
    def phase(self, name: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            self[name] = self.get(name, 0.0) + time.perf_counter() - start

    @property
    def total(self):
        return sum(self.values())
