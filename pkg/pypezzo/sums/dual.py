from functools import lru_cache
import numpy as np
from pypezzo.arith.crt import inverseMod
from pypezzo.arith.symbols import jacobi
from pypezzo.forms.quartic import evaluateMod, quarticForm
from pypezzo.sums import reduced
from pypezzo.sums.values import charsumValue, foldPhases
from pypezzo.utils.errors import budgetExceeded, nonCoprime

settings = {"dualBudget": 13, "compositeBudget": 45}


@lru_cache(maxsize=32)
def exactTable(F: quarticForm, p: int):
    """
    c(p, alpha) for every alpha in (Z/p)^3 as an exact int64 array indexed [a1, a2, a3].
    """
    table = np.empty((p, p, p), dtype=np.int64)
    for alpha in np.ndindex(p, p, p):
        table[alpha] = reduced.charsum(F, p, alpha).exact
    table.setflags(write=False)
    return table


def _fold(weights, n: int, x):
    a1, a2, a3 = np.indices((n, n, n), dtype=np.int64)
    x1, x2, x3 = (int(v) % n for v in x)
    phases = ((x1 * a1 + x2 * a2 + x3 * a3) % n).ravel()
    # weights reach p^6 at most, well inside float64's exact integer range
    counts = np.bincount(phases, weights=weights.ravel().astype(np.float64), minlength=n)
    return foldPhases(counts, n, x)


def charsumNaive(F: quarticForm, p: int, x, budget: int = None):
    """
    The dual sum C(p, x), the sum over alpha mod p of c(p, alpha) e((alpha . x) / p), from its definition.
    Uses the exact reduced evaluator for every inner sum, O(p^5) work in total.

    :param F: The form
    :param p: An odd prime, at most settings["dualBudget"]
    :param x: The frequency triple
    """
    budget = budget or settings["dualBudget"]
    if p > budget:
        raise budgetExceeded("dualCharsumNaive", p, budget)
    return _fold(exactTable(F, p), p, x)


def charsumClosed(F: quarticForm, p: int, x):
    """
    Closed form of the dual sum. Summing over alpha first forces beta = -x mod p, and F(-x) = F(x), so
    C(p, x) = p^3 chi_p(F(x)).

    :param F: The form
    :param p: An odd prime
    :param x: The frequency triple
    """
    return charsumValue.fromInteger(p**3 * jacobi(evaluateMod(F, x, p), p), p, x)


def compositeNaive(F: quarticForm, p: int, pp: int, x, budget: int = None):
    """
    C(x; p, p') = the sum over alpha mod p p' of c(p, alpha) c(p', alpha) e((alpha . x) / (p p')), from its definition.

    :param F: The form
    :param p: An odd prime
    :param pp: A second odd prime, distinct from p
    :param x: The frequency triple
    """
    if p == pp:
        raise nonCoprime(p, pp)
    n = p * pp
    budget = budget or settings["compositeBudget"]
    if n > budget:
        raise budgetExceeded("dualCharsumComposite", n, budget)
    a1, a2, a3 = np.indices((n, n, n), dtype=np.int64)
    left = exactTable(F, p)[a1 % p, a2 % p, a3 % p]
    right = exactTable(F, pp)[a1 % pp, a2 % pp, a3 % pp]
    return _fold(left * right, n, x)


def compositeSplit(F: quarticForm, p: int, pp: int, x, twisted: bool = True):
    """
    The factorization C(x; p, p') = C(p, inv(p') x) C(p', inv(p) x), with inv(a) the inverse of a modulo the other prime.
    With twisted=False both factors are taken at x itself, which agrees because chi_p(lambda^4 F(x)) = chi_p(F(x)).

    :param F: The form
    :param p: An odd prime
    :param pp: A second odd prime, distinct from p
    :param x: The frequency triple
    """
    if p == pp:
        raise nonCoprime(p, pp)
    if twisted:
        left_x = tuple(inverseMod(pp, p) * int(v) for v in x)
        right_x = tuple(inverseMod(p, pp) * int(v) for v in x)
    else:
        left_x = right_x = x
    value = charsumClosed(F, p, left_x).exact * charsumClosed(F, pp, right_x).exact
    return charsumValue.fromInteger(value, p * pp, x)
