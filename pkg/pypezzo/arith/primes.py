import logging
import math
import os
from dataclasses import dataclass
from pathlib import Path
import numpy as np
from sympy import isprime
from pypezzo.utils.errors import invalidModulus

logger = logging.getLogger(__name__)

settings = {
    "cacheDir": None,
    "cacheEnv": "PYPEZZO_CACHE",
    "segment": 1 << 18,
}


@dataclass(frozen=True)
class dyadicWindow:
    """
    An inclusive integer range [lo, hi]. With multiplier 2 this is the p ~ P convention (P <= p <= 2P),
    with multiplier 4 the q ~* Q convention for composite moduli.

    :ivar lo: Smallest integer in the window, at least 2
    :ivar hi: Largest integer in the window
    """

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo < 2:
            raise invalidModulus(self.lo, "window must start at 2 or above")
        if self.hi < self.lo:
            raise invalidModulus(self.hi, "window end lies below its start {}".format(self.lo))

    @classmethod
    def around(cls, P: float, multiplier: int = 2):
        """
        The window of integers n with P <= n <= multiplier * P.

        :param P: Real threshold
        :param multiplier: 2 for primes, 4 for products of two primes
        """
        lo = max(2, math.ceil(P))
        hi = max(lo, math.floor(multiplier * P))
        return cls(lo, hi)

    def __contains__(self, n: int):
        return self.lo <= n <= self.hi


def setCacheDir(path):
    """
    Set the directory primesIn uses for its cache files. None disables the disk cache.

    :param path: A directory path or None
    """
    settings["cacheDir"] = None if path is None else str(path)


def _cacheDir():
    if settings["cacheDir"]:
        return Path(settings["cacheDir"])
    env = os.environ.get(settings["cacheEnv"])
    return Path(env) if env else None


def _baseSieve(limit: int):
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p : limit + 1 : p] = False
    return np.flatnonzero(is_prime).astype(np.int64)


def segmentedSieve(lo: int, hi: int):
    """
    All primes in [lo, hi] by a segmented sieve of Eratosthenes.
    Memory stays bounded by the segment size in settings, whatever the length of the range.

    :param lo: Lower end, inclusive
    :param hi: Upper end, inclusive
    :return list: ascending primes
    """
    if hi < 2 or hi < lo:
        return []
    lo = max(lo, 2)
    base = _baseSieve(math.isqrt(hi) + 1)
    found = []
    span = settings["segment"]

    start = lo
    while start <= hi:
        stop = min(start + span - 1, hi)
        mask = np.ones(stop - start + 1, dtype=bool)
        for p in base:
            p = int(p)
            if p * p > stop:
                break
            first = max(p * p, ((start + p - 1) // p) * p)
            if first > stop:
                continue
            mask[first - start :: p] = False
        found.extend((start + np.flatnonzero(mask)).tolist())
        start = stop + 1

    return found


def primesIn(window: dyadicWindow, cacheDir=None):
    """
    Ascending list of the primes inside a window.
    When a cache directory is configured (argument, settings or the PYPEZZO_CACHE environment variable)
    the list is read from primes_<lo>_<hi>.txt, or computed and written there on a miss.

    :param window: The dyadicWindow to enumerate
    :param cacheDir: Optional override of the cache directory
    """
    directory = Path(cacheDir) if cacheDir else _cacheDir()
    if directory is None:
        return segmentedSieve(window.lo, window.hi)

    target = directory / "primes_{}_{}.txt".format(window.lo, window.hi)
    if target.exists():
        with open(target, "r", encoding="utf-8") as handle:
            return [int(line) for line in handle if line.strip()]

    logger.debug("Prime cache miss for [%d, %d]", window.lo, window.hi)
    primes = segmentedSieve(window.lo, window.hi)
    directory.mkdir(parents=True, exist_ok=True)
    # single writer: write to a temporary name and rename into place
    scratch = target.with_suffix(".tmp{}".format(os.getpid()))
    with open(scratch, "w", encoding="utf-8") as handle:
        handle.writelines("{}\n".format(p) for p in primes)
    os.replace(scratch, target)
    return primes


def isPrime(n: int):
    """
    Primality check used to validate caller supplied prime lists. Deterministic below 2**64.
    """
    return bool(isprime(n))


def oddPrimesIn(window: dyadicWindow, cacheDir=None):
    """
    primesIn without the prime 2, which has no Jacobi symbol.
    """
    return [p for p in primesIn(window, cacheDir) if p != 2]
