import logging
import math
from dataclasses import dataclass, field
from pypezzo.arith.primes import dyadicWindow, isPrime, oddPrimesIn
from pypezzo.forms.quartic import fitsInt64, heightBound, quarticForm, settings as form_settings
from pypezzo.utils.errors import degeneratePlan, inadmissiblePlan, nonCoprime, overflowError

logger = logging.getLogger(__name__)

settings = {
    "C": 1.0,
    "eps": 0.0,
    "multiplier": 2,
    "separation": 10,
}


@dataclass(frozen=True)
class sievePlan:
    """
    Parameters of one square sieve run.

    :ivar B: Box radius
    :ivar eps: The epsilon in P1 = B^(3/5 - eps), P2 = P1^(1/2 + eps)
    :ivar P1: First prime threshold
    :ivar P2: Second prime threshold
    :ivar primes1: Odd primes of the first window
    :ivar primes2: Odd primes of the second window, disjoint from primes1
    :ivar C: The constant in P2 >= C log B
    :ivar forced: True when the prime lists were supplied by the caller
    :ivar reasons: Admissibility conditions that fail, empty for an admissible plan
    :ivar wide: True when values of F on [-2B, 2B]^3 may not fit in int64
    """

    B: int
    eps: float
    P1: float
    P2: float
    primes1: tuple
    primes2: tuple
    C: float = 1.0
    forced: bool = False
    reasons: tuple = field(default=())
    wide: bool = False

    @property
    def Q(self):
        return self.P1 * self.P2

    @property
    def admissible(self):
        return not self.reasons

    @property
    def pairs(self):
        return len(self.primes1) * len(self.primes2)

    def require(self):
        """
        Raise inadmissiblePlan unless the plan satisfies both admissibility conditions.
        """
        if self.reasons:
            raise inadmissiblePlan(self.B, self.P1, self.P2, list(self.reasons))
        return self

    def toJson(self):
        return {
            "B": self.B,
            "eps": self.eps,
            "C": self.C,
            "P1": self.P1,
            "P2": self.P2,
            "Q": self.Q,
            "primes1": list(self.primes1),
            "primes2": list(self.primes2),
            "forced": self.forced,
            "admissible": self.admissible,
            "reasons": list(self.reasons),
            "wide": self.wide,
        }


def admissibility(B: int, P1: float, P2: float, C: float = None):
    """
    The failing conditions among P2 >= C log B and 10 P2 <= P1.

    :return tuple: human readable reasons, empty when both hold
    """
    C = settings["C"] if C is None else C
    reasons = []
    if P2 < C * math.log(B):
        reasons.append("P2 = {:.4g} < C log B = {:.4g}".format(P2, C * math.log(B)))
    if settings["separation"] * P2 > P1:
        reasons.append("10 P2 = {:.4g} > P1 = {:.4g}".format(settings["separation"] * P2, P1))
    return tuple(reasons)


def _forcedPrimes(primes, label: str):
    primes = tuple(sorted(set(int(p) for p in primes)))
    for p in primes:
        if p < 3 or not isPrime(p):
            raise degeneratePlan("{} contains {}, which is not an odd prime.".format(label, p))
    return primes


def _width(F: quarticForm, B: int):
    if F is None:
        return False
    if heightBound(F, 2 * B) >= 1 << (form_settings["widthBits"] - 1):
        raise overflowError(heightBound(F, 2 * B), form_settings["widthBits"])
    return not fitsInt64(F, 2 * B)


def makePlan(B: int, eps: float = None, C: float = None, primes1=None, primes2=None, F: quarticForm = None):
    """
    Build a sieve plan with P1 = B^(3/5 - eps) and P2 = P1^(1/2 + eps), primes from the windows [P, 2P].

    Forced prime lists replace the windows; P1 and P2 then become the smallest forced primes.
    Plans failing the admissibility conditions are still returned, flagged through their reasons.

    :param B: Box radius, at least 2
    :param eps: Defaults to settings["eps"]
    :param C: Defaults to settings["C"]
    :param primes1: Optional forced first window
    :param primes2: Optional forced second window
    :param F: When given, the plan records whether int64 evaluation is exact on [-2B, 2B]^3
    :return sievePlan: The plan
    """
    if B < 2:
        raise degeneratePlan("B must be at least 2, got {}.".format(B))
    eps = settings["eps"] if eps is None else eps
    C = settings["C"] if C is None else C

    P1 = B ** (0.6 - eps)
    P2 = P1 ** (0.5 + eps)

    if primes1 is not None:
        p1 = _forcedPrimes(primes1, "primes1")
        if p1:
            P1 = float(p1[0])
    else:
        p1 = tuple(oddPrimesIn(dyadicWindow.around(P1, settings["multiplier"])))
    if primes2 is not None:
        p2 = _forcedPrimes(primes2, "primes2")
        if p2:
            P2 = float(p2[0])
    else:
        p2 = tuple(oddPrimesIn(dyadicWindow.around(P2, settings["multiplier"])))

    shared = set(p1) & set(p2)
    if shared:
        if primes1 is not None and primes2 is not None:
            raise nonCoprime(min(shared), min(shared))
        logger.warning("Prime windows overlap at %s, dropping them from the second window", sorted(shared))
        p2 = tuple(p for p in p2 if p not in shared)

    if not p1 or not p2:
        raise degeneratePlan(
            "Prime window {} is empty for B={}. Raise B, lower C or force the windows.".format(
                "primes1" if not p1 else "primes2", B
            )
        )

    reasons = admissibility(B, P1, P2, C)
    if reasons:
        logger.warning("Plan for B=%d is inadmissible: %s", B, "; ".join(reasons))
    forced = primes1 is not None or primes2 is not None
    return sievePlan(B, eps, P1, P2, p1, p2, C, forced, reasons, _width(F, B))
