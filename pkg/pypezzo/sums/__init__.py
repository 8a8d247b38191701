from sympy import factorint
from pypezzo.sums import dual, multiplicative, naive, reduced, scan, square, table
from pypezzo.arith.primes import isPrime
from pypezzo.sums.values import charsumValue, setPrecision


def charsum(F, m: int, x):
    """
    The default method for c(m, x). Primes go to the reduced evaluator, odd squarefree composites
    to the multiplicative one and everything else to the naive triple sum.

    :param F: The form
    :param m: An odd positive modulus
    :param x: The frequency triple
    :return charsumValue: The value
    """
    if m == 1:
        return charsumValue.fromInteger(1, 1, x)
    if m > 2 and m % 2 and isPrime(m):
        return reduced.charsum(F, m, x)
    if m > 2 and m % 2 and all(e == 1 for e in factorint(m).values()):
        return multiplicative.charsum(F, m, x)
    return naive.charsum(F, m, x)


def charsumNaive(F, m: int, x, budget: int = None):
    return naive.charsum(F, m, x, budget)


def charsumPrimeReduced(F, p: int, x):
    return reduced.charsum(F, p, x)


def charsumMultiplicative(F, m: int, x, factors: list = None, convention: str = None):
    return multiplicative.charsum(F, m, x, factors, convention)


def charsumPrimeSquareTrivial(p: int, x):
    return square.collapse(p, x)


def charsumPrimeSquare(F, p: int, x):
    return square.withPrincipal(F, p, x)


def charsumTable(F, m: int, trivial: bool = False):
    return table.charsumTable(F, m, trivial)


def dualCharsumNaive(F, p: int, x, budget: int = None):
    return dual.charsumNaive(F, p, x, budget)


def dualCharsumClosed(F, p: int, x):
    return dual.charsumClosed(F, p, x)


def dualCharsumComposite(F, p: int, pp: int, x, budget: int = None):
    return dual.compositeNaive(F, p, pp, x, budget)


def dualCharsumCompositeSplit(F, p: int, pp: int, x, twisted: bool = True):
    return dual.compositeSplit(F, p, pp, x, twisted)
