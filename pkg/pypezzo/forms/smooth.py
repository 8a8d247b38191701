import numpy as np
from pypezzo.arith.primes import isPrime
from pypezzo.forms.quartic import partials, quarticForm, residueGrid, termsGrid
from pypezzo.utils.errors import budgetExceeded, invalidModulus

settings = {"smoothBudget": 101}


def singularPoints(F: quarticForm, p: int, budget: int = None):
    """
    Every nonzero beta in F_p^3 where F and its three partial derivatives vanish together, by exhaustive search.

    :param F: The form
    :param p: An odd prime within the search budget
    :param budget: Largest p allowed, defaults to settings["smoothBudget"]
    :return list: tuples (b1, b2, b3)
    """
    budget = budget or settings["smoothBudget"]
    if p % 2 == 0 or not isPrime(p):
        raise invalidModulus(p, "must be an odd prime")
    if p > budget:
        raise budgetExceeded("isSmoothModP", p, budget)

    common = residueGrid(F, p) == 0
    for cubic in partials(F):
        common &= termsGrid(cubic.items(), p) == 0
    common[0, 0, 0] = False
    return [tuple(int(v) for v in point) for point in np.argwhere(common)]


def isSmoothModP(F: quarticForm, p: int, budget: int = None):
    """
    True when the only common zero of F, dF/dx1, dF/dx2 and dF/dx3 over F_p^3 is the origin.
    This is the smoothness hypothesis behind the square root cancellation bounds.

    :param F: The form
    :param p: An odd prime, at most settings["smoothBudget"] unless budget is raised
    :param budget: Override for the search budget
    """
    return not singularPoints(F, p, budget)
