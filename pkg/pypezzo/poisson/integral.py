import math
from dataclasses import dataclass
from functools import lru_cache
from scipy import integrate
from pypezzo.poisson.weight import bumpWeight
from pypezzo.utils.errors import quadratureError

settings = {
    "tolerance": 1e-10,
    "limit": 200,
    "pieces": ((-2.0, -1.0), (-1.0, 1.0), (1.0, 2.0)),
}


@dataclass(frozen=True)
class oscValue:
    """
    The oscillatory integral I(qq', x) together with where it was evaluated.

    :ivar value: Complex value of the triple integral
    :ivar modulus: qq'
    :ivar x: The frequency triple
    :ivar error: Estimated absolute quadrature error of value
    :ivar factors: The three one dimensional integrals whose product is value
    """

    value: complex
    modulus: int
    x: tuple
    error: float
    factors: tuple

    def __abs__(self):
        return abs(self.value)


@lru_cache(maxsize=4096)
def axisTransform(component, xi: float, tol: float = None):
    """
    The one dimensional integral of component(y) e(-xi y) over [-2, 2], split at -1 and 1.
    Oscillatory pieces use QUADPACK's weighted rules (weight='cos' and 'sin').

    :param component: A vectorized callable supported in [-2, 2]
    :param xi: The real frequency
    :param tol: Absolute error target for the whole integral
    :return tuple: (complex value, estimated absolute error)
    """
    tol = tol or settings["tolerance"]
    omega = 2.0 * math.pi * xi
    share = tol / (2 * len(settings["pieces"]))
    re = im = err = 0.0
    for a, b in settings["pieces"]:
        if xi == 0:
            value, abserr = integrate.quad(
                component, a, b, epsabs=share, epsrel=0, limit=settings["limit"]
            )
            re += value
            err += abserr
            continue
        value, abserr = integrate.quad(
            component, a, b, weight="cos", wvar=omega, epsabs=share, epsrel=0,
            limit=settings["limit"],
        )
        re += value
        err += abserr
        value, abserr = integrate.quad(
            component, a, b, weight="sin", wvar=omega, epsabs=share, epsrel=0,
            limit=settings["limit"],
        )
        im -= value
        err += abserr
    if err > tol:
        raise quadratureError(err, tol, xi)
    return complex(re, im), err


def oscIntegral(weight: bumpWeight, qq_prime: int, x, B: int, tol: float = None):
    """
    I(qq', x), the integral of W(y) e(-(x . y) B / qq') over [-2, 2]^3.
    The phase is separable, so the triple integral is the product of three one dimensional ones,
    each computed to tol / 3.

    :param weight: The product weight W
    :param qq_prime: The modulus qq'
    :param x: The integer frequency triple
    :param B: The box radius
    :param tol: Requested accuracy, at least 1e-12
    :return oscValue: The value and its error estimate
    """
    tol = tol or settings["tolerance"]
    if tol < 1e-12:
        raise ValueError("Quadrature tolerance {} is below 1e-12.".format(tol))
    factors = []
    errors = []
    for j, xj in enumerate(x):
        value, err = axisTransform(weight.components[j], int(xj) * B / qq_prime, tol / 3)
        factors.append(value)
        errors.append(err)
    value = factors[0] * factors[1] * factors[2]
    # first order propagation of the factor errors
    error = sum(
        errors[j] * abs(factors[(j + 1) % 3]) * abs(factors[(j + 2) % 3]) for j in range(3)
    )
    return oscValue(value, qq_prime, tuple(int(v) for v in x), error, tuple(factors))
