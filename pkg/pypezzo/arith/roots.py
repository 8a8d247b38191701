from math import isqrt
import numpy as np
from pypezzo.utils.errors import domainError


def exactIsqrt(n: int):
    """
    Floor of the square root of n with no floating point involved, plus whether n is a perfect square.

    :param n: A non-negative integer of any size
    :return tuple: (s, is_square) with s*s <= n < (s+1)*(s+1)
    """
    if n < 0:
        raise domainError(n, "exactIsqrt")
    s = isqrt(n)
    return s, s * s == n


def isSquareArray(values):
    """
    Perfect square mask for an array of integers. Negative entries are never squares.

    int64 input is handled with a float estimate and two integer correction steps, which is exact while the values stay below 2**62.
    Object arrays fall back to exactIsqrt per entry.

    :param values: numpy array of integers
    :return np.ndarray: boolean mask
    """
    if values.dtype == object:
        flat = values.ravel()
        mask = np.fromiter(
            (v >= 0 and exactIsqrt(int(v))[1] for v in flat), dtype=bool, count=flat.size
        )
        return mask.reshape(values.shape)

    nonneg = values >= 0
    clipped = np.where(nonneg, values, 0)
    s = np.floor(np.sqrt(clipped.astype(np.float64))).astype(np.int64)
    # float rounding is at most one unit off in either direction below 2**62
    s = np.where(s * s > clipped, s - 1, s)
    s = np.where((s + 1) * (s + 1) <= clipped, s + 1, s)
    return nonneg & (s * s == clipped)
