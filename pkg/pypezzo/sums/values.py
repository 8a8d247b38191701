from dataclasses import dataclass
import mpmath
import numpy as np

settings = {
    "precision": 96,
    "tolerance": 1e-9,
}


def setPrecision(bits: int):
    """
    Working precision in bits for the phase sums. Anything under 80 bits is rejected.

    :param bits: mpmath working precision
    """
    if bits < 80:
        raise ValueError("Character sums need at least 80 bits, got {}.".format(bits))
    settings["precision"] = bits


@dataclass(frozen=True)
class charsumValue:
    """
    The value of a complete character sum together with where it was evaluated.

    :ivar re: Real part as an mpmath mpf
    :ivar im: Imaginary part as an mpmath mpf
    :ivar m: The modulus
    :ivar x: The frequency triple
    :ivar exact: The integer value when the evaluator produced it exactly, else None
    """

    re: mpmath.mpf
    im: mpmath.mpf
    m: int
    x: tuple
    exact: int = None

    @classmethod
    def fromInteger(cls, value: int, m: int, x):
        return cls(mpmath.mpf(value), mpmath.mpf(0), m, tuple(int(v) for v in x), int(value))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __abs__(self):
        if self.exact is not None:
            return float(abs(self.exact))
        with mpmath.workprec(settings["precision"]):
            return float(mpmath.sqrt(self.re**2 + self.im**2))

    def isReal(self, tol: float = None):
        return abs(self.im) <= (tol or settings["tolerance"])

    def rounded(self, tol: float = None):
        """
        The nearest integer, after checking the value really is an integer to within tol.
        """
        if self.exact is not None:
            return self.exact
        tol = tol or settings["tolerance"]
        nearest = int(mpmath.nint(self.re))
        if abs(self.re - nearest) > tol or abs(self.im) > tol:
            raise ValueError(
                "Value {} + {}i at m={} is not an integer.".format(self.re, self.im, self.m)
            )
        return nearest

    def ratio(self, power: float = 1.5):
        """
        |value| / m**power. With power 3/2 this is the square root cancellation ratio.
        """
        return abs(self) / float(self.m) ** power

    def close(self, other, tol: float = None):
        tol = tol or settings["tolerance"]
        return abs(self.re - other.re) <= tol and abs(self.im - other.im) <= tol


def foldPhases(counts, m: int, x):
    """
    Turn the integer weight of every phase class into a value.
    counts[k] holds the total character weight of terms whose phase is k/m, so the sum is
    the sum of counts[k] * e(k/m) with only m transcendental evaluations.

    :param counts: Integer weights per residue k mod m
    :param m: The modulus
    :param x: The frequency the counts belong to
    """
    counts = [int(c) for c in np.rint(np.asarray(counts, dtype=np.float64))]
    with mpmath.workprec(settings["precision"]):
        re = mpmath.fsum(c * mpmath.cospi(mpmath.mpf(2 * k) / m) for k, c in enumerate(counts) if c)
        im = mpmath.fsum(c * mpmath.sinpi(mpmath.mpf(2 * k) / m) for k, c in enumerate(counts) if c)
    return charsumValue(re, im, m, tuple(int(v) for v in x))
