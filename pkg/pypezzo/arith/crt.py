from math import gcd
from pypezzo.utils.errors import invalidModulus, nonCoprime


def _checkPair(m: int, n: int):
    if m < 1:
        raise invalidModulus(m, "must be positive")
    if n < 1:
        raise invalidModulus(n, "must be positive")
    if gcd(m, n) != 1:
        raise nonCoprime(m, n)


def crtSplit(r: int, m: int, n: int):
    """
    Split a residue mod m*n into its residues mod m and mod n.

    :param r: Residue mod m*n (any integer is accepted and reduced)
    :param m: First modulus
    :param n: Second modulus, coprime to m
    :return tuple: (r mod m, r mod n)
    """
    _checkPair(m, n)
    return r % m, r % n


def crtCombine(a: int, m: int, b: int, n: int):
    """
    The unique residue mod m*n that is a mod m and b mod n. Inverse of crtSplit.

    :param a: Residue mod m
    :param m: First modulus
    :param b: Residue mod n
    :param n: Second modulus, coprime to m
    """
    _checkPair(m, n)
    # a + m * ((b - a) / m mod n)
    return (a + m * (((b - a) * pow(m, -1, n)) % n)) % (m * n)


def inverseMod(a: int, m: int):
    """
    Inverse of a modulo m. The bar notation p-bar for the inverse of p mod p'.
    """
    if gcd(a, m) != 1:
        raise nonCoprime(a, m)
    return pow(a, -1, m)
