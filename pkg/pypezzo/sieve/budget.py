import math
from dataclasses import asdict, dataclass
from fractions import Fraction

settings = {"gridLo": Fraction(10, 100), "gridHi": Fraction(50, 100), "gridStep": Fraction(1, 100)}


@dataclass
class budgetReport:
    """
    The four terms of the final bound N(B) << B^3/(P1 P2) + P1^2 P2^3 + B^3/P2^3 + P1^3/P2.
    """

    B: float
    P1: float
    P2: float
    t1: float
    t2: float
    t3: float
    t4: float

    @property
    def terms(self):
        return (self.t1, self.t2, self.t3, self.t4)

    @property
    def max_term(self):
        return max(self.terms)

    @property
    def dominant(self):
        return "t{}".format(self.terms.index(self.max_term) + 1)

    @property
    def predicted_exponent(self):
        return math.log(self.max_term) / math.log(self.B)

    def toJson(self):
        data = asdict(self)
        data.update(
            max_term=self.max_term,
            dominant=self.dominant,
            predicted_exponent=self.predicted_exponent,
        )
        return data


def termBudget(B, P1, P2):
    """
    Evaluate the four bound terms at concrete B, P1 and P2.

    :param B: Box radius, above 1
    :param P1: First prime threshold
    :param P2: Second prime threshold
    :return budgetReport: The terms and the dominating exponent
    """
    if B <= 1 or P1 <= 0 or P2 <= 0:
        raise ValueError("termBudget needs B > 1 and positive thresholds.")
    B, P1, P2 = float(B), float(P1), float(P2)
    return budgetReport(B, P1, P2, B**3 / (P1 * P2), P1**2 * P2**3, B**3 / P2**3, P1**3 / P2)


def exponentBudget(a, b):
    """
    Exponents of the four terms when P1 = B^a and P2 = B^b, in exact rational arithmetic.

    :param a: Exponent of P1, anything Fraction accepts
    :param b: Exponent of P2
    :return tuple: (3 - a - b, 2a + 3b, 3 - 3b, 3a - b)
    """
    a, b = Fraction(a), Fraction(b)
    return (3 - a - b, 2 * a + 3 * b, 3 - 3 * b, 3 * a - b)


def optimizeBudget(lo=None, hi=None, step=None):
    """
    Scan b over [lo, hi] with a = 2b (P1 = P2^2) and find where the largest exponent is smallest.

    :return tuple: (trace rows, argmin b, minimal exponent), the last two as Fractions
    """
    lo = Fraction(settings["gridLo"] if lo is None else lo)
    hi = Fraction(settings["gridHi"] if hi is None else hi)
    step = Fraction(settings["gridStep"] if step is None else step)
    if step <= 0 or hi < lo:
        raise ValueError("Empty exponent grid [{}, {}] with step {}.".format(lo, hi, step))

    trace = []
    best = None
    b = lo
    while b <= hi:
        exponents = exponentBudget(2 * b, b)
        top = max(exponents)
        trace.append(
            {
                "b": float(b),
                "a": float(2 * b),
                "e1": float(exponents[0]),
                "e2": float(exponents[1]),
                "e3": float(exponents[2]),
                "e4": float(exponents[3]),
                "max_exponent": float(top),
            }
        )
        if best is None or top < best[1]:
            best = (b, top)
        b += step
    return trace, best[0], best[1]
