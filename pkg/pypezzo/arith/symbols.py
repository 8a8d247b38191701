from functools import lru_cache
import numpy as np
from pypezzo.utils.errors import invalidModulus


def jacobi(a: int, m: int):
    """
    The Jacobi symbol (a/m) by the binary reciprocity algorithm. No factorization of m is needed.

    :param a: Any integer, negative values are reduced mod m first
    :param m: An odd positive modulus
    :return int: -1, 0 or 1. Zero exactly when gcd(a, m) > 1.
    """
    if m <= 0 or m % 2 == 0:
        raise invalidModulus(m)

    a %= m
    result = 1
    while a:
        twos = (a & -a).bit_length() - 1
        a >>= twos
        if twos & 1 and m % 8 in (3, 5):
            result = -result
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a, m = m % a, a

    return result if m == 1 else 0


def eulerCriterion(a: int, p: int):
    """
    The Legendre symbol through Euler's criterion a^((p-1)/2) mod p. Slow, only used as an oracle.

    :param a: Any integer
    :param p: An odd prime
    """
    if p < 3 or p % 2 == 0:
        raise invalidModulus(p, "must be an odd prime")
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


@lru_cache(maxsize=512)
def jacobiTable(m: int):
    """
    Read only numpy row of (r/m) for r = 0 .. m-1.
    Built once per modulus and shared by every caller, so batch phases can look symbols up instead of recomputing them.

    :param m: An odd positive modulus
    :return np.ndarray: int8 array of length m
    """
    if m <= 0 or m % 2 == 0:
        raise invalidModulus(m)
    row = np.fromiter((jacobi(r, m) for r in range(m)), dtype=np.int8, count=m)
    row.setflags(write=False)
    return row


def jacobiArray(values, m: int):
    """
    Vectorized Jacobi symbol of every entry of an integer array against one modulus.
    Works on int64 and on object (Python int) arrays.

    :param values: numpy array of integers, any sign
    :param m: An odd positive modulus
    """
    residues = np.mod(values, m)
    if residues.dtype == object:
        residues = residues.astype(np.int64)
    return jacobiTable(m)[residues]
