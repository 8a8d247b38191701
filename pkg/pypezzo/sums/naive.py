from functools import lru_cache
import numpy as np
from pypezzo.arith.symbols import jacobiTable
from pypezzo.forms.quartic import quarticForm, residueGrid
from pypezzo.sums.values import charsumValue, foldPhases
from pypezzo.utils.errors import budgetExceeded, invalidModulus

settings = {"naiveBudget": 45}


def _checkModulus(m: int):
    if m <= 0 or m % 2 == 0:
        raise invalidModulus(m)


@lru_cache(maxsize=64)
def characterGrid(F: quarticForm, m: int, trivial: bool = False):
    """
    chi_m(F(beta)) for every beta in (Z/m)^3, flattened, together with the flattened beta coordinates.
    With trivial=True the character is replaced by the constant 1 (plain Poisson summation).

    :return tuple: (weights, b1, b2, b3) as read only int64 arrays of length m**3
    """
    _checkModulus(m)
    if trivial:
        weights = np.ones(m**3, dtype=np.int64)
    else:
        weights = jacobiTable(m)[residueGrid(F, m)].astype(np.int64).ravel()
    b1, b2, b3 = (axis.ravel() for axis in np.indices((m, m, m), dtype=np.int64))
    for array in (weights, b1, b2, b3):
        array.setflags(write=False)
    return weights, b1, b2, b3


def phaseCounts(F: quarticForm, m: int, x, trivial: bool = False):
    """
    Integer weight of each phase class k/m in the sum defining c(m, x).

    :return np.ndarray: int64 array of length m
    """
    weights, b1, b2, b3 = characterGrid(F, m, trivial)
    x1, x2, x3 = (int(v) % m for v in x)
    phases = (x1 * b1 + x2 * b2 + x3 * b3) % m
    counts = np.bincount(phases, weights=weights, minlength=m)
    return np.rint(counts).astype(np.int64)


def charsum(F: quarticForm, m: int, x, budget: int = None, trivial: bool = False):
    """
    c(m, x), the sum over all beta mod m of chi_m(F(beta)) e((x . beta) / m), straight from the definition.
    All m**3 terms are visited, so m is limited by the naive budget.

    :param F: The form
    :param m: An odd positive modulus
    :param x: The frequency triple
    :param budget: Largest m allowed, defaults to settings["naiveBudget"]
    :param trivial: Use the trivial character instead of chi_m
    :return charsumValue: The high precision value
    """
    _checkModulus(m)
    budget = budget or settings["naiveBudget"]
    if m > budget:
        raise budgetExceeded("charsumNaive", m, budget)
    if m == 1:
        return charsumValue.fromInteger(1, 1, x)
    return foldPhases(phaseCounts(F, m, x, trivial), m, x)
