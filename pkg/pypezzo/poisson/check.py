import logging
import math
from dataclasses import asdict, dataclass
import numpy as np
from pypezzo.forms.quartic import quarticForm
from pypezzo.poisson.integral import axisTransform
from pypezzo.poisson.integral import settings as quad_settings
from pypezzo.poisson.weight import bumpWeight, canonicalWeight
from pypezzo.sums.multiplicative import factorSquarefree
from pypezzo.sums.naive import characterGrid
from pypezzo.sums.table import charsumTable
from pypezzo.utils.errors import budgetExceeded, domainError, nonCoprime, truncationError

logger = logging.getLogger(__name__)

settings = {
    "decayConstant": 50,
    "tailTolerance": 1e-6,
    "doublingTolerance": 1e-8,
    "tableBudget": 105,
}


@dataclass
class poissonResult:
    """
    Both sides of the Poisson identity for one (q, q', B) cell.

    :ivar lhs: The direct sum of chi_qq'(F(x)) W(x / B) over all integer x
    :ivar rhs: (B / qq')^3 times the truncated sum of c(qq', k) I(qq', k)
    :ivar rel_error: |lhs - rhs| / max(|lhs|, 1)
    :ivar tail: Absolute size of the outermost frequency shell
    :ivar doubling_change: Relative change of rhs when the truncation is doubled, None when not run
    """

    q: int
    q_prime: int
    B: int
    lhs: float
    rhs: complex
    rel_error: float
    truncation: int
    quadrature_tol: float
    tail: float
    doubling_change: float = None
    trivial: bool = False

    def toJson(self):
        data = asdict(self)
        rhs = data.pop("rhs")
        data["rhs_re"] = rhs.real
        data["rhs_im"] = rhs.imag
        return data


def decayRadius(modulus: int, B: int):
    """
    Frequencies beyond ceil(50 qq' / B) per component contribute below quadrature accuracy for the canonical bump.
    """
    return max(1, math.ceil(settings["decayConstant"] * modulus / B))


def _checkModuli(q: int, q_prime: int):
    factorSquarefree(q)
    factorSquarefree(q_prime)
    if math.gcd(q, q_prime) != 1:
        raise nonCoprime(q, q_prime)


def directSide(F: quarticForm, m: int, B: int, weight: bumpWeight, trivial: bool = False):
    """
    The sum of chi_m(F(x)) W(x / B) over every integer x in [-2B, 2B]^3.
    chi_m(F(x)) only depends on x mod m, so the weights are first folded onto residue classes per axis.
    """
    chi = characterGrid(F, m, trivial)[0].reshape(m, m, m).astype(np.float64)
    folded = []
    for j in range(3):
        x, w = weight.axisSamples(j, B)
        folded.append(np.bincount(x % m, weights=w, minlength=m))
    return float(np.einsum("abc,a,b,c->", chi, *folded))


def _transforms(weight: bumpWeight, m: int, B: int, T: int, tol: float):
    k = np.arange(-T, T + 1, dtype=np.int64)
    values = []
    for j in range(3):
        values.append(
            np.array([axisTransform(weight.components[j], int(v) * B / m, tol / 3)[0] for v in k])
        )
    return k, values


def _fold(k, values, m: int, T: int):
    inside = np.abs(k) <= T
    folded = np.zeros(m, dtype=np.complex128)
    np.add.at(folded, k[inside] % m, values[inside])
    return folded


def dualSide(table, k, transforms, m: int, B: int, T: int):
    """
    (B / m)^3 times the sum over |k_i| <= T of c(m, k) I(m, k), with the frequencies folded mod m.

    :return tuple: (rhs, absolute size of the shell max|k_i| = T)
    """
    scale = (B / m) ** 3
    folded = [_fold(k, values, m, T) for values in transforms]
    rhs = scale * complex(np.einsum("abc,a,b,c->", table, *folded))

    size = np.abs(table)
    outer = [_fold(k, np.abs(values), m, T).real for values in transforms]
    total = float(np.einsum("abc,a,b,c->", size, *outer))
    if T > 0:
        inner = [_fold(k, np.abs(values), m, T - 1).real for values in transforms]
        total -= float(np.einsum("abc,a,b,c->", size, *inner))
    return rhs, scale * total


def poissonCheck(
    F: quarticForm,
    q: int,
    q_prime: int,
    B: int,
    weight: bumpWeight = None,
    truncation: int = None,
    tol: float = None,
    trivial: bool = False,
    doubling: bool = True,
):
    """
    Check the Poisson identity for chi_qq'(F(x)) W(x / B).

    The dual side uses the FFT table of c(qq', k) and the one dimensional oscillatory integrals.
    With trivial=True the character is replaced by 1, which is classical Poisson summation.

    :param F: The form
    :param q: An odd squarefree modulus
    :param q_prime: A second one, coprime to q
    :param B: Box radius
    :param weight: Smooth product weight, the canonical bump by default
    :param truncation: Frequency cutoff per component, decayRadius() by default
    :param tol: Quadrature tolerance
    :param trivial: Replace chi_qq' by the constant 1
    :param doubling: Also evaluate the dual side at twice the truncation
    :return poissonResult: Both sides and the error figures
    """
    weight = weight or canonicalWeight()
    if not weight.smooth:
        raise domainError(weight.name, "poissonCheck")
    _checkModuli(q, q_prime)
    m = q * q_prime
    if m > settings["tableBudget"]:
        raise budgetExceeded("poissonCheck", m, settings["tableBudget"])
    tol = tol or quad_settings["tolerance"]
    T = decayRadius(m, B) if truncation is None else int(truncation)

    lhs = directSide(F, m, B, weight, trivial)
    table = charsumTable(F, m, trivial)
    k, transforms = _transforms(weight, m, B, 2 * T if doubling else T, tol)
    rhs, tail = dualSide(table, k, transforms, m, B, T)

    if tail > settings["tailTolerance"] * max(abs(rhs), 1.0):
        raise truncationError(T, tail, abs(rhs))

    change = None
    if doubling:
        wider, _ = dualSide(table, k, transforms, m, B, 2 * T)
        change = abs(wider - rhs) / max(abs(rhs), 1.0)

    rel_error = abs(lhs - rhs) / max(abs(lhs), 1.0)
    logger.info(
        "Poisson q=%d q'=%d B=%d truncation=%d: rel_error %.3e", q, q_prime, B, T, rel_error
    )
    return poissonResult(q, q_prime, B, lhs, rhs, rel_error, T, tol, tail, change, trivial)
