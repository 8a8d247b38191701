from math import gcd, prod
from sympy import factorint
from pypezzo.arith.crt import inverseMod
from pypezzo.forms.quartic import quarticForm
from pypezzo.sums import reduced
from pypezzo.sums.values import charsumValue
from pypezzo.utils.errors import invalidModulus, nonCoprime

settings = {"convention": "reduced"}


def factorSquarefree(m: int):
    """
    Prime factors of an odd squarefree modulus.

    :param m: An odd positive squarefree integer
    :return list: ascending primes whose product is m
    """
    if m <= 0 or m % 2 == 0:
        raise invalidModulus(m)
    factors = factorint(m)
    if any(e > 1 for e in factors.values()):
        raise invalidModulus(m, "must be squarefree")
    return sorted(factors)


def _checkFactors(m: int, factors: list):
    for i, p in enumerate(factors):
        for q in factors[i + 1 :]:
            if gcd(p, q) != 1:
                raise nonCoprime(p, q)
    if prod(factors) != m:
        raise invalidModulus(m, "factors {} do not multiply to the modulus".format(factors))


def charsum(F: quarticForm, m: int, x, factors: list = None, convention: str = None):
    """
    c(m, x) for odd squarefree m as the product of its prime factor sums.

    Writing beta = beta' n + beta'' m for mn splits both characters. The quartic factor n^4 disappears inside chi_m,
    so every factor is evaluated at x reduced mod the factor ("reduced" convention).
    The "twisted" convention evaluates the factor p at (m/p)^-1 x instead. Both give the same number because
    c(p, lambda x) = c(p, x) whenever p does not divide lambda.

    :param F: The form
    :param m: Odd squarefree modulus
    :param x: The frequency triple
    :param factors: Prime factorization of m, computed when omitted
    :param convention: "reduced" or "twisted", defaults to settings["convention"]
    :return charsumValue: The exact value
    """
    if m == 1:
        return charsumValue.fromInteger(1, 1, x)
    factors = sorted(factors) if factors else factorSquarefree(m)
    _checkFactors(m, factors)
    convention = convention or settings["convention"]
    if convention not in ("reduced", "twisted"):
        raise ValueError("Unknown frequency convention {!r}.".format(convention))

    value = 1
    for p in factors:
        if convention == "twisted":
            twist = inverseMod((m // p) % p, p)
            frequency = tuple(twist * int(v) % p for v in x)
        else:
            frequency = tuple(int(v) % p for v in x)
        value *= reduced.charsum(F, p, frequency).exact
    return charsumValue.fromInteger(value, m, x)
