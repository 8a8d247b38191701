from functools import lru_cache
import numpy as np
from pypezzo.forms.quartic import quarticForm
from pypezzo.sums.naive import characterGrid


@lru_cache(maxsize=16)
def charsumTable(F: quarticForm, m: int, trivial: bool = False):
    """
    c(m, k) for every frequency k in (Z/m)^3 at once, indexed [k1, k2, k3].

    numpy's inverse FFT computes (1/m^3) times the sum of a[beta] e(+k . beta / m), which is exactly the sign
    convention of c(m, k), so the table is m^3 * ifftn of the character grid. Double precision only, for batch use.

    :param F: The form
    :param m: An odd positive modulus
    :param trivial: Use the trivial character instead of chi_m
    :return np.ndarray: complex128 array of shape (m, m, m)
    """
    weights = characterGrid(F, m, trivial)[0].reshape(m, m, m).astype(np.float64)
    table = np.fft.ifftn(weights) * m**3
    table.setflags(write=False)
    return table
