import logging
import random
import mpmath
from pypezzo.arith.primes import dyadicWindow, oddPrimesIn
from pypezzo.forms.quartic import quarticForm
from pypezzo.forms.smooth import isSmoothModP
from pypezzo.sums import dual, multiplicative, naive, reduced, square
from pypezzo.sums.values import settings as value_settings

logger = logging.getLogger(__name__)

settings = {
    "oraclePrimes": (3, 5, 7, 11, 13),
    "katzLimit": 97,
    "katzConstant": 27,
    "katzSamples": 200,
    "dualPrimes": (3, 5, 7),
    "dualSamples": 50,
    "multiplicativeModuli": (15, 21, 35),
    "multiplicativeSamples": 200,
    "squarePrimes": (3, 5),
}


def _deviation(a, b):
    return float(max(abs(a.re - b.re), abs(a.im - b.im)))


def _summary(name: str, rows: list, passed: bool, **extra):
    summary = {"suite": name, "rows": len(rows), "passed": bool(passed)}
    summary.update(extra)
    logger.info("%s: %s over %d rows", name, "pass" if passed else "FAIL", len(rows))
    return summary


def oracleGrid(F: quarticForm, primes=None, tol: float = None):
    """
    Reduced evaluator against the naive one on the full grid x in [0, p)^3 for each prime.

    :return tuple: (rows, summary)
    """
    primes = primes or settings["oraclePrimes"]
    tol = tol or value_settings["tolerance"]
    rows = []
    worst = 0.0
    for p in primes:
        for x in ((a, b, c) for a in range(p) for b in range(p) for c in range(p)):
            fast = reduced.charsum(F, p, x)
            slow = naive.charsum(F, p, x, budget=max(p, naive.settings["naiveBudget"]))
            deviation = _deviation(fast, slow)
            worst = max(worst, deviation)
            rows.append(
                {
                    "p": p,
                    "x1": x[0],
                    "x2": x[1],
                    "x3": x[2],
                    "re": fast.exact,
                    "im": 0,
                    "naive_re": float(slow.re),
                    "naive_im": float(slow.im),
                    "deviation": deviation,
                    "ratio_to_p32": fast.ratio(),
                }
            )
    return rows, _summary("oracle", rows, worst <= tol, max_deviation=worst)


def katzScan(F: quarticForm, limit: int = None, samples: int = None, seed: int = 0):
    """
    |c(p, x)| / p^(3/2) for every odd prime p <= limit at seeded random frequencies.
    The bound (d-1)^n = 27 is asserted on the primes where F is smooth.

    :return tuple: (rows, summary)
    """
    limit = limit or settings["katzLimit"]
    samples = samples or settings["katzSamples"]
    rng = random.Random(seed)
    rows = []
    worst = 0.0
    worst_smooth = 0.0
    for p in oddPrimesIn(dyadicWindow(2, max(limit, 2))):
        smooth = isSmoothModP(F, p, budget=max(p, 101))
        for _ in range(samples):
            x = (rng.randrange(p), rng.randrange(p), rng.randrange(p))
            value = reduced.charsum(F, p, x)
            ratio = value.ratio()
            worst = max(worst, ratio)
            if smooth:
                worst_smooth = max(worst_smooth, ratio)
            rows.append(
                {
                    "p": p,
                    "x1": x[0],
                    "x2": x[1],
                    "x3": x[2],
                    "re": value.exact,
                    "im": 0,
                    "ratio_to_p32": ratio,
                    "smooth": smooth,
                }
            )
    passed = worst_smooth <= settings["katzConstant"]
    return rows, _summary(
        "katz", rows, passed, max_ratio=worst, max_ratio_smooth=worst_smooth, seed=seed
    )


def dualCollapse(F: quarticForm, primes=None, samples: int = None, seed: int = 0, tol: float = None):
    """
    The dual sum from its definition against p^3 chi_p(F(x)) at seeded frequencies.

    :return tuple: (rows, summary)
    """
    primes = primes or settings["dualPrimes"]
    samples = samples or settings["dualSamples"]
    tol = tol or value_settings["tolerance"]
    rng = random.Random(seed)
    rows = []
    worst = 0.0
    for p in primes:
        for _ in range(samples):
            x = (rng.randrange(p), rng.randrange(p), rng.randrange(p))
            slow = dual.charsumNaive(F, p, x, budget=max(p, dual.settings["dualBudget"]))
            closed = dual.charsumClosed(F, p, x)
            deviation = float(max(abs(slow.re - closed.exact), abs(slow.im)))
            worst = max(worst, deviation)
            rows.append(
                {
                    "p": p,
                    "x1": x[0],
                    "x2": x[1],
                    "x3": x[2],
                    "re": float(slow.re),
                    "im": float(slow.im),
                    "closed": closed.exact,
                    "deviation": deviation,
                    "ratio_to_p3": abs(closed) / p**3,
                }
            )
    return rows, _summary("dual", rows, worst <= tol, max_deviation=worst, seed=seed)


def multiplicativity(F: quarticForm, moduli=None, samples: int = None, seed: int = 0, tol: float = None):
    """
    The naive sum at a composite modulus against the product of prime factor sums, under both frequency conventions.

    :return tuple: (rows, summary)
    """
    moduli = moduli or settings["multiplicativeModuli"]
    samples = samples or settings["multiplicativeSamples"]
    tol = tol or value_settings["tolerance"]
    rng = random.Random(seed)
    rows = []
    worst = 0.0
    for m in moduli:
        for _ in range(samples):
            x = (rng.randrange(m), rng.randrange(m), rng.randrange(m))
            slow = naive.charsum(F, m, x, budget=max(m, naive.settings["naiveBudget"]))
            row = {"m": m, "x1": x[0], "x2": x[1], "x3": x[2], "re": float(slow.re), "im": float(slow.im)}
            for convention in ("reduced", "twisted"):
                product = multiplicative.charsum(F, m, x, convention=convention)
                deviation = float(max(abs(slow.re - product.exact), abs(slow.im)))
                worst = max(worst, deviation)
                row[convention] = product.exact
            rows.append(row)
    return rows, _summary("multiplicative", rows, worst <= tol, max_deviation=worst, seed=seed)


def primeSquare(primes=None, tol: float = None):
    """
    The p^2 collapse against direct summation over all p^6 triples.
    The frequencies cover every divisibility pattern: multiples of p^2, multiples of p only, and units.

    :return tuple: (rows, summary)
    """
    primes = primes or settings["squarePrimes"]
    tol = tol or value_settings["tolerance"]
    rows = []
    passed = True
    for p in primes:
        q = p * p
        for x in ((0, 0, 0), (q, q, q), (q, 2 * q, 0), (p, 0, 0), (1, 0, 0), (p, q, 1), (q, q, p)):
            direct = square.collapseDirect(p, x, budget=max(p, square.settings["squareBudget"]))
            expected = square.collapse(p, x)
            with mpmath.workprec(value_settings["precision"]):
                ok = abs(direct.re - expected) <= tol and abs(direct.im) <= tol
            passed &= bool(ok)
            rows.append(
                {"p": p, "x1": x[0], "x2": x[1], "x3": x[2], "collapse": expected, "direct": float(direct.re)}
            )
    return rows, _summary("prime-square", rows, passed)
