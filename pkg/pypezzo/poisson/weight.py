from dataclasses import dataclass, field
import numpy as np


def _s(u):
    u = np.asarray(u, dtype=np.float64)
    safe = np.where(u > 0, u, 1.0)
    return np.where(u > 0, np.exp(-1.0 / safe), 0.0)


def bumpEval(t):
    """
    The canonical smooth transition W1(t) = s(2 - |t|) / (s(2 - |t|) + s(|t| - 1)) with s(u) = exp(-1/u) for u > 0, else 0.
    Equal to 1 on [-1, 1], 0 outside (-2, 2) and infinitely differentiable everywhere.

    :param t: A real number or numpy array
    :return: float or np.ndarray of the same shape
    """
    a = np.abs(np.asarray(t, dtype=np.float64))
    up = _s(2.0 - a)
    down = _s(a - 1.0)
    # up + down > 0 for every t, one of the two is positive
    value = up / (up + down)
    return float(value) if value.ndim == 0 else value


def boxEval(t):
    """
    Indicator of [-1, 1]. Not smooth, so only for the unsmoothed comparison of the main sum.
    """
    value = (np.abs(np.asarray(t, dtype=np.float64)) <= 1.0).astype(np.float64)
    return float(value) if value.ndim == 0 else value


@dataclass(frozen=True)
class bumpWeight:
    """
    A product weight W(y1, y2, y3) = W1(y1) W2(y2) W3(y3).

    :ivar components: Three vectorized callables, each supported in [-2, 2]
    :ivar smooth: False for weights that are not smooth (the box), which the Poisson check refuses
    :ivar name: Label used in reports
    """

    components: tuple = field(default=(bumpEval, bumpEval, bumpEval))
    smooth: bool = True
    name: str = "bump"

    def axis(self, j: int, t):
        return self.components[j](t)

    def __call__(self, y1, y2, y3):
        return self.axis(0, y1) * self.axis(1, y2) * self.axis(2, y3)

    def axisSamples(self, j: int, B: int):
        """
        W_j(x / B) for every integer x in [-2B, 2B], which covers the whole support.

        :return tuple: (x, values) numpy arrays
        """
        x = np.arange(-2 * B, 2 * B + 1, dtype=np.int64)
        return x, np.asarray(self.axis(j, x / B), dtype=np.float64)


def canonicalWeight():
    return bumpWeight()


def boxWeight():
    return bumpWeight((boxEval, boxEval, boxEval), smooth=False, name="box")
