import logging
from dataclasses import asdict, dataclass
from functools import partial
import numpy as np
from pypezzo.arith.symbols import jacobiArray
from pypezzo.forms.quartic import fitsInt64, quarticForm, sliceValues
from pypezzo.poisson.weight import bumpWeight, canonicalWeight
from pypezzo.sieve.plan import sievePlan
from pypezzo.utils.errors import budgetExceeded
from pypezzo.utils.helpers import exactTotal, mapSlices

logger = logging.getLogger(__name__)

settings = {"maxPrimes": 4, "maxB": 60}


@dataclass
class mainsumReport:
    """
    S(Q, B) split by the shape of the pair (q, q'), every value already divided by Q^2.

    :ivar total: All pairs with q != q'
    :ivar sharp: gcd(q, q') = 1, i.e. p1 != p1' and p2 != p2'
    :ivar flat: gcd(q, q') > 1 with q != q'
    :ivar flat1: p1 != p1' and p2 = p2'
    :ivar flat2: p1 = p1' and p2 != p2'
    :ivar diagonal: q = q', not part of S(Q, B)
    :ivar diagonal_bound: (number of pairs) (4B + 1)^3 / Q^2
    :ivar sharp_factorized: sharp recomputed point by point from the window sums, as a cross check
    """

    B: int
    weight: str
    total: float
    sharp: float
    flat: float
    flat1: float
    flat2: float
    diagonal: float
    diagonal_bound: float
    sharp_factorized: float

    def toJson(self):
        return asdict(self)


@dataclass
class sharpTerms:
    """
    The four pieces of the coprime part and how they recombine, all divided by Q^2.

    :ivar S1: All (q, q') pairs
    :ivar S2: Pairs with p2 = p2'
    :ivar S3: Pairs with p1 = p1'
    :ivar S4: Pairs with p1 = p1' and p2 = p2'
    :ivar exact_combination: S1 - S2 - S3 + S4, which is sharp by inclusion and exclusion
    :ivar coefficient_two: S1 - S2 - S3 + 2 S4, larger than sharp by exactly S4
    :ivar identity_error: |exact_combination - sharp| relative to the largest of the four terms
    :ivar ratio_S3: |S3| / (P1^2 P2^3)
    :ivar ratio_S4: |S4| / (P1^2 P2^2)
    """

    S1: float
    S2: float
    S3: float
    S4: float
    sharp: float
    exact_combination: float
    coefficient_two: float
    identity_error: float
    ratio_S3: float
    ratio_S4: float

    def toJson(self):
        return asdict(self)


def _checkBudget(plan: sievePlan):
    size = max(len(plan.primes1), len(plan.primes2))
    if size > settings["maxPrimes"]:
        raise budgetExceeded("mainsumDirect", size, settings["maxPrimes"])
    if plan.B > settings["maxB"]:
        raise budgetExceeded("mainsumDirect", plan.B, settings["maxB"])


def _characters(values, primes):
    return np.stack([jacobiArray(values, p).ravel() for p in primes]).astype(np.float64)


def _pairSlice(F: quarticForm, plan: sievePlan, weight: bumpWeight, wide: bool, x1: int):
    B = plan.B
    n1, n2 = len(plan.primes1), len(plan.primes2)
    w1 = float(weight.axis(0, x1 / B))
    if w1 == 0.0:
        return np.zeros((n1 * n1, n2 * n2)), 0.0

    x, w2 = weight.axisSamples(1, B)
    _, w3 = weight.axisSamples(2, B)
    w = (w1 * np.outer(w2, w3)).ravel()
    values = sliceValues(F, x1, x, wide)

    a1 = _characters(values, plan.primes1)
    a2 = _characters(values, plan.primes2)
    left = (a1[:, None, :] * a1[None, :, :]).reshape(n1 * n1, -1)
    right = (a2[:, None, :] * a2[None, :, :]).reshape(n2 * n2, -1)
    pairs = (left * w) @ right.T

    d1, u1 = a1.sum(axis=0), (a1 * a1).sum(axis=0)
    d2, u2 = a2.sum(axis=0), (a2 * a2).sum(axis=0)
    sharp = float(np.dot(w, (d1 * d1 - u1) * (d2 * d2 - u2)))
    return pairs, sharp


def pairTensor(F: quarticForm, plan: sievePlan, weight: bumpWeight = None, workers: int = 1):
    """
    M[i, j, k, l], the weighted sum over x in [-2B, 2B]^3 of chi_{p_i p_k}(F(x)) chi_{p_j p_l}(F(x)) W(x / B),
    with i, j indexing primes1 and k, l indexing primes2. Every restricted pair sum is a masked sum of M.

    :return tuple: (M of shape (n1, n1, n2, n2), factorized sharp sum)
    """
    _checkBudget(plan)
    weight = weight or canonicalWeight()
    wide = plan.wide or not fitsInt64(F, 2 * plan.B)
    parts = mapSlices(
        partial(_pairSlice, F, plan, weight, wide), range(-2 * plan.B, 2 * plan.B + 1), workers
    )
    n1, n2 = len(plan.primes1), len(plan.primes2)
    M = np.zeros((n1 * n1, n2 * n2))
    sharp = []
    for pairs, value in parts:
        M += pairs
        sharp.append(value)
    return M.reshape(n1, n1, n2, n2), exactTotal(sharp)


def _masks(n1: int, n2: int):
    same1 = np.eye(n1, dtype=bool)[:, :, None, None]
    same2 = np.eye(n2, dtype=bool)[None, None, :, :]
    return same1, same2


def mainsumDirect(F: quarticForm, plan: sievePlan, weight: bumpWeight = None, workers: int = 1):
    """
    S(Q, B) = (1 / Q^2) times the sum over q != q' of the sum over x of chi_qq'(F(x)) W(x / B), straight from the pairs.

    Only tiny plans are allowed (settings["maxPrimes"] primes per window, B up to settings["maxB"]).

    :param F: The form
    :param plan: A (usually forced) sieve plan
    :param weight: Product weight, the canonical bump by default
    :param workers: Process pool size
    :return mainsumReport: S(Q, B) and its parts
    """
    weight = weight or canonicalWeight()
    M, sharp_factorized = pairTensor(F, plan, weight, workers)
    return _report(M, sharp_factorized, plan, weight)


def _report(M, sharp_factorized, plan: sievePlan, weight: bumpWeight):
    n1, n2 = len(plan.primes1), len(plan.primes2)
    same1, same2 = _masks(n1, n2)
    norm = plan.Q**2

    diagonal = float(M[same1 & same2].sum())
    sharp = float(M[~same1 & ~same2].sum())
    flat1 = float(M[~same1 & same2].sum())
    flat2 = float(M[same1 & ~same2].sum())
    total = float(M.sum()) - diagonal

    report = mainsumReport(
        plan.B,
        weight.name,
        total / norm,
        sharp / norm,
        (flat1 + flat2) / norm,
        flat1 / norm,
        flat2 / norm,
        diagonal / norm,
        plan.pairs * (4 * plan.B + 1) ** 3 / norm,
        sharp_factorized / norm,
    )
    logger.info(
        "S(Q, B) at B=%d: %.6g (sharp %.6g, flat %.6g)",
        plan.B, report.total, report.sharp, report.flat,
    )
    return report


def decomposeSharpTerms(F: quarticForm, plan: sievePlan, weight: bumpWeight = None, workers: int = 1):
    """
    The four sums S1 (all pairs), S2 (p2 = p2'), S3 (p1 = p1') and S4 (both equal), each from its own pair set.

    :return sharpTerms: The terms, both recombinations and the bound ratios
    """
    M, _ = pairTensor(F, plan, weight, workers)
    return _terms(M, plan)


def _terms(M, plan: sievePlan):
    n1, n2 = len(plan.primes1), len(plan.primes2)
    same1, same2 = _masks(n1, n2)
    norm = plan.Q**2
    same1 = np.broadcast_to(same1, M.shape)
    same2 = np.broadcast_to(same2, M.shape)

    S1 = float(M.sum()) / norm
    S2 = float(M[same2].sum()) / norm
    S3 = float(M[same1].sum()) / norm
    S4 = float(M[same1 & same2].sum()) / norm
    sharp = float(M[~same1 & ~same2].sum()) / norm

    exact = S1 - S2 - S3 + S4
    scale = max(abs(S1), abs(S2), abs(S3), abs(S4), 1e-300)
    return sharpTerms(
        S1,
        S2,
        S3,
        S4,
        sharp,
        exact,
        exact + S4,
        abs(exact - sharp) / scale,
        abs(S3) / (plan.P1**2 * plan.P2**3),
        abs(S4) / (plan.P1**2 * plan.P2**2),
    )


def mainsumSplit(F: quarticForm, plan: sievePlan, weight: bumpWeight = None, workers: int = 1):
    """
    mainsumDirect and decomposeSharpTerms from a single pass over the box.

    :return tuple: (mainsumReport, sharpTerms)
    """
    weight = weight or canonicalWeight()
    M, sharp_factorized = pairTensor(F, plan, weight, workers)
    return _report(M, sharp_factorized, plan, weight), _terms(M, plan)
