import numpy as np
from pypezzo.forms.quartic import quarticForm, residueGrid
from pypezzo.sums.values import foldPhases
from pypezzo.utils.errors import budgetExceeded

settings = {"squareBudget": 7}


def collapse(p: int, x):
    """
    The p^2 component sum with no multiplicative character left in it. It factors into three geometric sums
    over beta mod p^2, so it is p^6 when p^2 divides every x_i and 0 otherwise.

    :param p: An odd prime
    :param x: The frequency triple
    :return int: p**6 or 0
    """
    q = p * p
    return p**6 if all(int(v) % q == 0 for v in x) else 0


def _direct(weights, q: int, x):
    b1, b2, b3 = np.indices((q, q, q), dtype=np.int64)
    x1, x2, x3 = (int(v) % q for v in x)
    phases = ((x1 * b1 + x2 * b2 + x3 * b3) % q).ravel()
    counts = np.bincount(phases, weights=weights.ravel(), minlength=q)
    return foldPhases(counts, q, x)


def collapseDirect(p: int, x, budget: int = None):
    """
    The same additive sum visited term by term over all p^6 triples. Oracle for collapse().
    """
    budget = budget or settings["squareBudget"]
    if p > budget:
        raise budgetExceeded("charsumPrimeSquareDirect", p, budget)
    q = p * p
    return _direct(np.ones((q, q, q), dtype=np.float64), q, x)


def withPrincipal(F: quarticForm, p: int, x, budget: int = None):
    """
    The p^2 sum with the principal character mod p kept: the sum over beta mod p^2 of [p does not divide F(beta)] e((x . beta) / p^2).
    The difference from collapse() is the contribution of the locus F = 0 mod p, which the collapse ignores.

    :param F: The form
    :param p: An odd prime
    :param x: The frequency triple
    """
    budget = budget or settings["squareBudget"]
    if p > budget:
        raise budgetExceeded("charsumPrimeSquare", p, budget)
    q = p * p
    weights = (residueGrid(F, q) % p != 0).astype(np.float64)
    return _direct(weights, q, x)


def collapseDefect(F: quarticForm, p: int, x):
    """
    withPrincipal(F, p, x) - collapse(p, x), rounded to the integer it is.
    """
    return withPrincipal(F, p, x).rounded() - collapse(p, x)


