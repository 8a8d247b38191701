import logging
from dataclasses import asdict, dataclass, field
from functools import partial
import numpy as np
from pypezzo.arith.roots import isSquareArray
from pypezzo.forms.quartic import fitsInt64, heightBound, quarticForm, sliceValues
from pypezzo.forms.quartic import settings as form_settings
from pypezzo.utils.errors import overflowError
from pypezzo.utils.helpers import exactTotal, mapSlices, phaseTimer

logger = logging.getLogger(__name__)


@dataclass
class countReport:
    """
    Result of a counting run.

    :ivar B: Box radius
    :ivar exact_count: N(B)
    :ivar sieve_rhs: The sieve bound, None for a plain count
    :ivar ratio: sieve_rhs / exact_count when both are known
    :ivar wall_time: Seconds per phase
    """

    B: int
    exact_count: int
    sieve_rhs: float = None
    ratio: float = None
    wall_time: dict = field(default_factory=dict)

    def toJson(self):
        return asdict(self)


def _countSlice(F: quarticForm, B: int, wide: bool, x1: int):
    axis = np.arange(-B, B + 1, dtype=np.int64)
    values = sliceValues(F, x1, axis, wide)
    return int(isSquareArray(values).sum())


def bruteCount(F: quarticForm, B: int, workers: int = 1):
    """
    N(B), the number of x in [-B, B]^3 with F(x) a perfect square. F(x) = 0 counts (y = 0), negative values never do.

    The box is cut into x1 slices, each evaluated as a numpy grid over (x2, x3).
    Grids are int64 while max|c| 15 B^4 < 2^62 and exact Python integers beyond.

    :param F: The form
    :param B: Box radius, B >= 0
    :param workers: Size of the process pool, 1 keeps everything in process
    :return countReport: exact_count filled in, timing under "count"
    """
    if B < 0:
        raise ValueError("Box radius must be non-negative, got {}.".format(B))
    timer = phaseTimer()
    wide = not fitsInt64(F, B)
    if wide:
        logger.info("Values of F exceed int64 at B=%d, counting with exact integers", B)
        bound = heightBound(F, B)
        if bound >= 1 << (form_settings["widthBits"] - 1):
            raise overflowError(bound, form_settings["widthBits"])
    with timer.phase("count"):
        parts = mapSlices(partial(_countSlice, F, B, wide), range(-B, B + 1), workers)
        total = exactTotal(parts)
    logger.info(
        "N(%d) = %d over %d points in %.3fs", B, total, (2 * B + 1) ** 3, timer["count"]
    )
    return countReport(B, total, wall_time=dict(timer))


def countGrid(F: quarticForm, grid, workers: int = 1):
    """
    bruteCount for every B of a grid, in the order given.
    """
    return [bruteCount(F, B, workers) for B in grid]
