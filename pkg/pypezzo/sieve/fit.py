import logging
from dataclasses import asdict, dataclass
import numpy as np
from pypezzo.forms.quartic import quarticForm
from pypezzo.sieve.count import bruteCount

logger = logging.getLogger(__name__)

settings = {"minPoints": 4}


@dataclass
class fitReport:
    """
    Least squares line through (log B, log N(B)).

    :ivar slope: The fitted exponent
    :ivar intercept: log of the fitted constant
    :ivar grid: B values that entered the fit
    :ivar counts: N(B) for those values
    :ivar residuals: log N(B) minus the fitted line, per point
    :ivar excluded: B values dropped because N(B) = 0
    """

    slope: float
    intercept: float
    grid: list
    counts: list
    residuals: list
    excluded: list

    def toJson(self):
        return asdict(self)


def _checkGrid(grid):
    grid = [int(B) for B in grid]
    if len(grid) < settings["minPoints"] or grid != sorted(grid):
        raise ValueError(
            "The B grid must be ascending with at least {} points.".format(settings["minPoints"])
        )
    return grid


def fitCounts(grid, counts):
    """
    Fit log N against log B for already known counts. Points with N = 0 are excluded with a warning.

    :param grid: Ascending B values
    :param counts: N(B) per grid value
    :return fitReport: The fit
    """
    grid = _checkGrid(grid)
    keep = [(B, N) for B, N in zip(grid, counts) if N > 0]
    excluded = [B for B, N in zip(grid, counts) if N <= 0]
    if excluded:
        logger.warning("Excluding B=%s from the fit, N(B) = 0 there", excluded)
    if len(keep) < 2:
        raise ValueError("Fewer than two grid points with N(B) > 0.")

    x = np.log(np.array([B for B, _ in keep], dtype=np.float64))
    y = np.log(np.array([N for _, N in keep], dtype=np.float64))
    slope, intercept = np.polyfit(x, y, 1)
    residuals = y - (slope * x + intercept)
    return fitReport(
        float(slope),
        float(intercept),
        [B for B, _ in keep],
        [int(N) for _, N in keep],
        [float(r) for r in residuals],
        excluded,
    )


def exponentFit(F: quarticForm, grid, workers: int = 1):
    """
    Count N(B) on every grid point and fit the growth exponent.

    :param F: The form
    :param grid: Ascending B values, at least four
    :param workers: Process pool size for the counts
    """
    grid = _checkGrid(grid)
    counts = [bruteCount(F, B, workers).exact_count for B in grid]
    return fitCounts(grid, counts)
