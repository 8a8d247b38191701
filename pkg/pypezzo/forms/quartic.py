import re
from dataclasses import dataclass
from typing import NamedTuple
import numpy as np
import ujson
from pypezzo.utils.errors import malformedForm, overflowError

settings = {
    "degree": 4,
    "widthBits": 128,
    "compiledRegex": {
        "key": re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*$"),
        "rawKey": re.compile(r'"([^"]*)"\s*:'),
    },
}

MONOMIALS = tuple(
    (i, j, 4 - i - j) for i in range(4, -1, -1) for j in range(4 - i, -1, -1)
)


class latticeTriple(NamedTuple):
    """
    An integer vector (x1, x2, x3). Used both for points of the box and for Poisson frequencies.
    """

    x1: int
    x2: int
    x3: int

    def scaled(self, factor: int):
        return latticeTriple(factor * self.x1, factor * self.x2, factor * self.x3)

    def reduced(self, m: int):
        return latticeTriple(self.x1 % m, self.x2 % m, self.x3 % m)

    def dot(self, other):
        return self.x1 * other[0] + self.x2 * other[1] + self.x3 * other[2]

    def __neg__(self):
        return self.scaled(-1)


@dataclass(frozen=True)
class quarticForm:
    """
    A ternary quartic form F(x1, x2, x3) = sum of c_ijk x1^i x2^j x3^k over i + j + k = 4.
    Immutable once built. Only the nonzero terms are stored, sorted by exponent.

    :ivar terms: tuple of ((i, j, k), c) pairs with c != 0
    """

    terms: tuple

    def __post_init__(self):
        if not self.terms:
            raise malformedForm("At least one coefficient must be nonzero.")
        for (i, j, k), c in self.terms:
            if min(i, j, k) < 0 or i + j + k != settings["degree"]:
                raise malformedForm(
                    "Monomial x1^{} x2^{} x3^{} does not have degree 4.".format(i, j, k)
                )

    @classmethod
    def fromCoefficients(cls, coeffs: dict):
        """
        Build a form from a mapping of exponent triples to integer coefficients. Zero entries are dropped.

        :param coeffs: {(i, j, k): c}
        """
        terms = tuple(sorted((tuple(e), int(c)) for e, c in coeffs.items() if c != 0))
        return cls(terms)

    @property
    def coeffs(self):
        """
        All 15 coefficients, zeros included.
        """
        table = {e: 0 for e in MONOMIALS}
        table.update(dict(self.terms))
        return table

    @property
    def maxCoefficient(self):
        return max(abs(c) for _, c in self.terms)

    def coefficient(self, i: int, j: int, k: int):
        return dict(self.terms).get((i, j, k), 0)

    def toJson(self):
        return {"{},{},{}".format(*e): c for e, c in self.terms}

    def __str__(self):
        pieces = []
        for (i, j, k), c in self.terms:
            mono = "*".join(
                "x{}^{}".format(n + 1, e) if e > 1 else "x{}".format(n + 1)
                for n, e in enumerate((i, j, k))
                if e
            )
            pieces.append("{}*{}".format(c, mono))
        return " + ".join(pieces)


def parseForm(text):
    """
    Parse a form description. The format is a JSON object mapping "i,j,k" strings to integer coefficients.
    Unlisted monomials are zero.

    :param text: JSON text, or an already decoded dictionary
    :return quarticForm: The validated form
    """
    if isinstance(text, (str, bytes)):
        if isinstance(text, bytes):
            text = text.decode("utf-8")
        raw_keys = settings["compiledRegex"]["rawKey"].findall(text)
        try:
            data = ujson.loads(text)
        except ValueError:
            raise malformedForm("Form description is not valid JSON.")
        if not isinstance(data, dict):
            raise malformedForm("Form description must be a JSON object.")
        # the decoder silently keeps the last of two equal keys
        if len(raw_keys) != len(data):
            raise malformedForm("Duplicate monomial keys in form description.")
    elif isinstance(text, dict):
        data = text
    else:
        raise malformedForm("Unsupported form description of type {}.".format(type(text)))

    coeffs = {}
    for key, value in data.items():
        match = settings["compiledRegex"]["key"].match(str(key))
        if match is None:
            raise malformedForm("Key {!r} is not of the form 'i,j,k'.".format(key))
        exponent = tuple(int(g) for g in match.groups())
        if sum(exponent) != settings["degree"]:
            raise malformedForm(
                "Monomial {!r} has degree {} instead of 4.".format(key, sum(exponent))
            )
        if exponent in coeffs:
            raise malformedForm("Duplicate monomial {!r}.".format(key))
        if isinstance(value, bool) or not isinstance(value, int):
            raise malformedForm("Coefficient of {!r} must be an integer.".format(key))
        coeffs[exponent] = value

    return quarticForm.fromCoefficients(coeffs)


def loadForm(path):
    """
    Read and parse a form file.

    :param path: Path to a JSON form file
    """
    with open(path, "r", encoding="utf-8") as handle:
        return parseForm(handle.read())


def evaluate(F: quarticForm, x, bits: int = None):
    """
    Exact value of F at an integer triple.

    :param F: The form
    :param x: Any sequence of three integers
    :param bits: Declared signed width, defaults to settings["widthBits"]
    """
    x1, x2, x3 = (int(v) for v in x)
    value = sum(c * x1**i * x2**j * x3**k for (i, j, k), c in F.terms)
    bits = bits or settings["widthBits"]
    if abs(value) >= 1 << (bits - 1):
        raise overflowError(value, bits)
    return value


def evaluateMod(F: quarticForm, beta, m: int):
    """
    F(beta) mod m, reducing every term so intermediate values stay below m**2.

    :param F: The form
    :param beta: Any sequence of three integers
    :param m: A positive modulus
    """
    b1, b2, b3 = (int(v) % m for v in beta)
    total = 0
    for (i, j, k), c in F.terms:
        total += (c % m) * pow(b1, i, m) % m * pow(b2, j, m) % m * pow(b3, k, m)
        total %= m
    return total


def isDiagonalZero(F: quarticForm):
    """
    True when c_400 = c_040 = c_004 = 0, the case the sieve analysis treats.
    """
    return all(F.coefficient(*e) == 0 for e in ((4, 0, 0), (0, 4, 0), (0, 0, 4)))


def partials(F: quarticForm):
    """
    The three first partial derivatives as exact cubic coefficient maps.

    :return list: [dF/dx1, dF/dx2, dF/dx3], each a dict {(i, j, k): c} with i + j + k = 3
    """
    result = []
    for axis in range(3):
        cubic = {}
        for exponent, c in F.terms:
            if exponent[axis] == 0:
                continue
            lowered = list(exponent)
            lowered[axis] -= 1
            cubic[tuple(lowered)] = cubic.get(tuple(lowered), 0) + c * exponent[axis]
        result.append(cubic)
    return result


def heightBound(F: quarticForm, B: int):
    """
    max|c| * 15 * B**4, an upper bound for |F(x)| on the box [-B, B]^3.
    """
    return F.maxCoefficient * len(MONOMIALS) * B**4


def fitsInt64(F: quarticForm, B: int):
    """
    Whether numpy int64 grid evaluation is exact on the box. Leaves headroom up to 2**62 for the square test.
    """
    return heightBound(F, B) < 1 << 62


def sliceValues(F: quarticForm, x1: int, axis, wide: bool = False):
    """
    F(x1, x2, x3) for one fixed x1 over the full (x2, x3) grid built from axis.

    :param F: The form
    :param x1: The fixed first coordinate
    :param axis: 1-d numpy array of the x2 (and x3) values
    :param wide: Use exact Python integers (object arrays) instead of int64
    :return np.ndarray: 2-d array indexed [x2, x3]
    """
    dtype = object if wide else np.int64
    col = np.asarray(axis, dtype=dtype)
    x2 = col[:, None]
    x3 = col[None, :]
    values = np.zeros((col.size, col.size), dtype=dtype)
    for (i, j, k), c in F.terms:
        values = values + (c * int(x1) ** i) * (x2**j * x3**k)
    return values


def residueGrid(F: quarticForm, m: int):
    """
    F(beta) mod m for every beta in (Z/m)^3 as an (m, m, m) int64 array, reduced term by term.

    :param F: The form
    :param m: A positive modulus
    """
    return termsGrid(F.terms, m)


def termsGrid(terms, m: int):
    """
    Residue grid of any homogeneous polynomial given as ((i, j, k), c) pairs. Degrees up to 4.
    """
    powers = _powerRows(m)
    grid = np.zeros((m, m, m), dtype=np.int64)
    for (i, j, k), c in terms:
        term = (c % m) * powers[i] % m
        grid += (
            term[:, None, None] * (powers[j][:, None] * powers[k][None, :] % m)[None, :, :]
        ) % m
        grid %= m
    return grid


KLEIN_QUARTIC = quarticForm.fromCoefficients({(3, 1, 0): 1, (0, 3, 1): 1, (1, 0, 3): 1})
DIAGONAL_QUARTIC = quarticForm.fromCoefficients({(4, 0, 0): 1, (0, 4, 0): 1, (0, 0, 4): -1})


def _powerRows(m: int, top: int = 4):
    r = np.arange(m, dtype=np.int64)
    rows = [np.ones(m, dtype=np.int64) % m]
    for _ in range(top):
        rows.append(rows[-1] * r % m)
    return rows


def chartGrid(F: quarticForm, m: int):
    """
    F(1, b2, b3) mod m over all (b2, b3), an (m, m) array. The beta1 != 0 chart of the projective plane.
    """
    powers = _powerRows(m)
    grid = np.zeros((m, m), dtype=np.int64)
    for (i, j, k), c in F.terms:
        grid += (c % m) * (powers[j][:, None] * powers[k][None, :] % m) % m
        grid %= m
    return grid


def lineValues(F: quarticForm, m: int):
    """
    F(0, 1, b3) mod m over all b3, the beta1 = 0, beta2 != 0 chart.
    """
    powers = _powerRows(m)
    row = np.zeros(m, dtype=np.int64)
    for (i, j, k), c in F.terms:
        if i == 0:
            row += (c % m) * powers[k] % m
            row %= m
    return row
