import logging
from functools import lru_cache
import numpy as np
from pypezzo.arith.primes import isPrime
from pypezzo.arith.symbols import jacobi, jacobiTable
from pypezzo.forms.quartic import chartGrid, lineValues, quarticForm
from pypezzo.sums import naive
from pypezzo.sums.values import charsumValue
from pypezzo.utils.errors import invalidModulus

logger = logging.getLogger(__name__)


@lru_cache(maxsize=256)
def _charts(F: quarticForm, p: int):
    # chi_p on the beta1 = 1 chart, the (0, 1, b3) line and the point (0, 0, 1)
    table = jacobiTable(p)
    plane = table[chartGrid(F, p)].astype(np.int64)
    line = table[lineValues(F, p)].astype(np.int64)
    point = jacobi(F.coefficient(0, 0, 4), p)
    for array in (plane, line):
        array.setflags(write=False)
    return plane, line, point


def _geometric(p: int, hits, total):
    # sum over t != 0 of e(t L / p) is p - 1 when L = 0 and -1 otherwise
    return p * hits - total


def charsum(F: quarticForm, p: int, x):
    """
    c(p, x) for an odd prime p in O(p^2) work and exact integer arithmetic.

    Points with beta1 != 0 are written beta1 * (1, b2, b3). Since chi_p(beta1^4 F) = chi_p(F) the sum over beta1
    is a complete geometric sum, worth p - 1 when x1 + x2 b2 + x3 b3 = 0 mod p and -1 otherwise.
    The plane beta1 = 0 gets the same treatment with beta2 as the scaling variable, and the last line
    beta1 = beta2 = 0 contributes chi_p(c_004) times the geometric sum in x3.

    :param F: The form
    :param p: An odd prime
    :param x: The frequency triple
    :return charsumValue: The exact value
    """
    if p < 3 or p % 2 == 0 or not isPrime(p):
        raise invalidModulus(p, "must be an odd prime")

    plane, line, point = _charts(F, p)
    if not plane.any():
        logger.warning(
            "F(1, b2, b3) vanishes identically mod %d, falling back to the naive sum", p
        )
        return naive.charsum(F, p, x, budget=p)

    x1, x2, x3 = (int(v) % p for v in x)
    r = np.arange(p, dtype=np.int64)

    chart = (x1 + x2 * r[:, None] + x3 * r[None, :]) % p == 0
    value = _geometric(p, int(plane[chart].sum()), int(plane.sum()))

    on_line = (x2 + x3 * r) % p == 0
    value += _geometric(p, int(line[on_line].sum()), int(line.sum()))

    value += point * (p - 1 if x3 == 0 else -1)
    return charsumValue.fromInteger(value, p, x)
