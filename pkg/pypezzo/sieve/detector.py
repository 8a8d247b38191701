import logging
from dataclasses import asdict, dataclass
from functools import partial
import numpy as np
from pypezzo.arith.roots import isSquareArray
from pypezzo.arith.symbols import jacobi, jacobiArray
from pypezzo.forms.quartic import fitsInt64, quarticForm, sliceValues
from pypezzo.sieve.plan import sievePlan
from pypezzo.utils.helpers import exactTotal, mapSlices, phaseTimer

logger = logging.getLogger(__name__)


def detectorSum(n: int, plan: sievePlan):
    """
    D(n), the sum of (n / p1 p2) over both prime windows, through the factorization
    D(n) = (sum of (n / p1)) (sum of (n / p2)).

    :param n: Any integer
    :param plan: The sieve plan
    """
    return sum(jacobi(n, p) for p in plan.primes1) * sum(jacobi(n, p) for p in plan.primes2)


def detectorDirect(n: int, plan: sievePlan):
    """
    D(n) from its definition, one Jacobi symbol per modulus p1 p2. Oracle for detectorSum().
    """
    return sum(jacobi(n, p1 * p2) for p1 in plan.primes1 for p2 in plan.primes2)


def windowSums(values, primes):
    """
    The sum of (v / p) and the number of primes coprime to v, for every entry v of an integer array.

    :return tuple: (symbol sum, coprime count) as int64 arrays shaped like values
    """
    total = np.zeros(values.shape, dtype=np.int64)
    units = np.zeros(values.shape, dtype=np.int64)
    for p in primes:
        chi = jacobiArray(values, p).astype(np.int64)
        total += chi
        units += chi * chi
    return total, units


@dataclass
class sieveReport:
    """
    The right hand side of the sieve inequality and its split by q = q'.

    :ivar total: (1 / (P1 P2)^2) times the sum of D(F(x))^2 over the box
    :ivar diagonal: The q = q' part of total
    :ivar off_diagonal: The q != q' part, S(Q, B) with the unsmoothed box weight
    :ivar coprime_squares: Number of x with F(x) a nonzero square coprime to every plan prime
    :ivar lower_bound: coprime_squares (|primes1| |primes2|)^2 / (P1 P2)^2, which total can never fall below
    :ivar squares_detected: True when D(F(x)) = |primes1| |primes2| at every coprime square
    """

    B: int
    total: float
    diagonal: float
    off_diagonal: float
    detector_square_sum: int
    diagonal_count: int
    coprime_squares: int
    lower_bound: float
    squares_detected: bool
    wall_time: dict

    def toJson(self):
        return asdict(self)


def _rhsSlice(F: quarticForm, B: int, plan: sievePlan, wide: bool, x1: int):
    axis = np.arange(-B, B + 1, dtype=np.int64)
    values = sliceValues(F, x1, axis, wide)
    d1, u1 = windowSums(values, plan.primes1)
    d2, u2 = windowSums(values, plan.primes2)
    D = d1 * d2
    coprime = (u1 == len(plan.primes1)) & (u2 == len(plan.primes2))
    squares = isSquareArray(values) & (values != 0) & coprime
    missed = int((squares & (D != plan.pairs)).sum())
    return int((D * D).sum()), int((u1 * u2).sum()), int(squares.sum()), missed


def sieveRhs(F: quarticForm, plan: sievePlan, workers: int = 1):
    """
    Evaluate the sieve bound (1 / (P1 P2)^2) times the sum over x in [-B, B]^3 of D(F(x))^2.

    Jacobi symbols are looked up per prime, never per product p1 p2, since (n / p1 p2) = (n / p1)(n / p2).
    The diagonal q = q' equals the number of pairs coprime to F(x), summed over x.

    :param F: The form
    :param plan: The sieve plan, box radius plan.B
    :param workers: Process pool size
    :return sieveReport: The bound, its split and the coprime square check
    """
    timer = phaseTimer()
    B = plan.B
    with timer.phase("sieve"):
        task = partial(_rhsSlice, F, B, plan, plan.wide or not fitsInt64(F, B))
        parts = mapSlices(task, range(-B, B + 1), workers)
    square_sum = exactTotal(p[0] for p in parts)
    diagonal = exactTotal(p[1] for p in parts)
    coprime = exactTotal(p[2] for p in parts)
    missed = exactTotal(p[3] for p in parts)
    norm = plan.Q**2
    if missed:
        logger.warning("%d coprime squares were not detected with full weight", missed)
    logger.info(
        "Sieve B=%d with %dx%d primes: sum D^2 = %d, diagonal = %d in %.3fs",
        B, len(plan.primes1), len(plan.primes2), square_sum, diagonal, timer["sieve"],
    )
    return sieveReport(
        B,
        square_sum / norm,
        diagonal / norm,
        (square_sum - diagonal) / norm,
        square_sum,
        diagonal,
        coprime,
        coprime * plan.pairs**2 / norm,
        missed == 0,
        dict(timer),
    )
