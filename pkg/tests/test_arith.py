import math
import random
import numpy as np
import pytest
from sympy import isprime
import pypezzo.arith.crt as crt
import pypezzo.arith.primes as pri
import pypezzo.arith.roots as roo
import pypezzo.arith.symbols as sym
from pypezzo.utils.errors import domainError, invalidModulus, nonCoprime


@pytest.fixture(autouse=True)
def noPrimeCache(monkeypatch):
    monkeypatch.delenv("PYPEZZO_CACHE", raising=False)
    pri.setCacheDir(None)
    yield
    pri.setCacheDir(None)


# pypezzo.arith.symbols


class Test_Jacobi:
    """
    Test the symbol helpers at pypezzo.arith.symbols
    Covered: jacobi, eulerCriterion, jacobiTable, jacobiArray
    """

    def test_Examples(self):
        assert sym.jacobi(1, 9) == 1
        assert sym.jacobi(0, 5) == 0
        assert sym.jacobi(2, 15) == 1
        assert sym.jacobi(2, 3) == -1
        assert sym.jacobi(-1, 7) == -1

    def test_BadModulus(self):
        for m in (0, -3, 4, 10):
            with pytest.raises(invalidModulus):
                sym.jacobi(1, m)

    def test_EulerAgreement(self):
        for p in pri.oddPrimesIn(pri.dyadicWindow(3, 199)):
            for a in range(p):
                assert sym.jacobi(a, p) == sym.eulerCriterion(a, p)

    def test_MultiplicativeInNumerator(self):
        rng = random.Random(0)
        for _ in range(1000):
            a, b = rng.randrange(-10**6, 10**6), rng.randrange(-10**6, 10**6)
            m = 2 * rng.randrange(0, 5000) + 1
            assert sym.jacobi(a * b, m) == sym.jacobi(a, m) * sym.jacobi(b, m)

    def test_MultiplicativeInModulus(self):
        rng = random.Random(1)
        for _ in range(500):
            m = 2 * rng.randrange(0, 200) + 1
            n = 2 * rng.randrange(0, 200) + 1
            a = rng.randrange(-10**6, 10**6)
            assert sym.jacobi(a, m * n) == sym.jacobi(a, m) * sym.jacobi(a, n)

    def test_ZeroIffCommonFactor(self):
        for m in (9, 15, 21, 45):
            for a in range(3 * m):
                assert (sym.jacobi(a, m) == 0) == (math.gcd(a, m) > 1)

    def test_Table(self):
        row = sym.jacobiTable(7)
        assert row.tolist() == [0, 1, 1, -1, 1, -1, -1]
        assert not row.flags.writeable

    def test_Array(self):
        values = np.array([-1, 0, 1, 2, 3, 7, 8], dtype=np.int64)
        expected = [sym.jacobi(int(v), 7) for v in values]
        assert sym.jacobiArray(values, 7).tolist() == expected
        wide = np.array([2**70 + 1, -(2**70)], dtype=object)
        assert sym.jacobiArray(wide, 7).tolist() == [sym.jacobi(2**70 + 1, 7), sym.jacobi(-(2**70), 7)]


# pypezzo.arith.primes


class Test_Primes:
    """
    Test pypezzo.arith.primes
    Covered: dyadicWindow, segmentedSieve, primesIn with and without the disk cache, oddPrimesIn
    """

    def test_Examples(self):
        assert pri.primesIn(pri.dyadicWindow(10, 20)) == [11, 13, 17, 19]
        assert pri.primesIn(pri.dyadicWindow(2, 2)) == [2]
        assert pri.primesIn(pri.dyadicWindow(24, 28)) == []

    def test_Window(self):
        window = pri.dyadicWindow.around(10)
        assert (window.lo, window.hi) == (10, 20)
        assert 15 in window and 21 not in window
        assert pri.dyadicWindow.around(10, 4).hi == 40
        with pytest.raises(invalidModulus):
            pri.dyadicWindow(1, 5)
        with pytest.raises(invalidModulus):
            pri.dyadicWindow(9, 5)

    def test_SegmentBoundaries(self, monkeypatch):
        monkeypatch.setitem(pri.settings, "segment", 17)
        found = pri.segmentedSieve(100, 1000)
        assert found == [n for n in range(100, 1001) if isprime(n)]

    def test_OddOnly(self):
        assert pri.oddPrimesIn(pri.dyadicWindow(2, 12)) == [3, 5, 7, 11]

    def test_Cache(self, tmp_path):
        window = pri.dyadicWindow(10, 20)
        assert pri.primesIn(window, cacheDir=tmp_path) == [11, 13, 17, 19]
        target = tmp_path / "primes_10_20.txt"
        assert target.read_text(encoding="utf-8") == "11\n13\n17\n19\n"
        # a cached file wins over recomputation
        target.write_text("11\n", encoding="utf-8")
        assert pri.primesIn(window, cacheDir=tmp_path) == [11]

    def test_CacheFromEnvironment(self, tmp_path, monkeypatch):
        monkeypatch.setenv("PYPEZZO_CACHE", str(tmp_path))
        pri.primesIn(pri.dyadicWindow(24, 28))
        assert (tmp_path / "primes_24_28.txt").read_text(encoding="utf-8") == ""

    def test_IsPrime(self):
        assert pri.isPrime(2**61 - 1)
        assert not pri.isPrime(2**61 + 1)


# pypezzo.arith.crt


class Test_CRT:
    def test_Examples(self):
        assert crt.crtSplit(7, 3, 5) == (1, 2)
        assert crt.crtCombine(0, 3, 0, 5) == 0

    def test_RoundTrip(self):
        rng = random.Random(2)
        for m, n in ((3, 5), (3, 7), (5, 7)):
            for _ in range(1000):
                r = rng.randrange(m * n)
                assert crt.crtCombine(*_interleave(crt.crtSplit(r, m, n), m, n)) == r

    def test_NonCoprime(self):
        with pytest.raises(nonCoprime):
            crt.crtSplit(1, 3, 6)
        with pytest.raises(nonCoprime):
            crt.crtCombine(1, 9, 2, 15)

    def test_Inverse(self):
        assert crt.inverseMod(3, 7) == 5
        with pytest.raises(nonCoprime):
            crt.inverseMod(3, 9)


def _interleave(parts, m, n):
    return parts[0], m, parts[1], n


# pypezzo.arith.roots


class Test_Roots:
    def test_Examples(self):
        assert roo.exactIsqrt(0) == (0, True)
        assert roo.exactIsqrt(16) == (4, True)
        assert roo.exactIsqrt(2**64 + 1) == (2**32, False)
        assert roo.exactIsqrt(2**126) == (2**63, True)

    def test_Negative(self):
        with pytest.raises(domainError):
            roo.exactIsqrt(-1)

    def test_RandomSquares(self):
        rng = random.Random(3)
        for _ in range(10**4):
            s = rng.randrange(1, 2**60)
            assert roo.exactIsqrt(s * s) == (s, True)
            assert roo.exactIsqrt(s * s + 1) == (s, False)

    def test_SquareArray(self):
        s = 2**31 - 1
        values = np.array([-4, 0, 1, 2, 3, 4, 15, 16, s * s, s * s + 1, s * s - 1], dtype=np.int64)
        expected = [False, True, True, False, False, True, False, True, True, False, False]
        assert roo.isSquareArray(values).tolist() == expected
        wide = np.array([2**100, 2**100 + 1, -(2**100), 0], dtype=object)
        assert roo.isSquareArray(wide).tolist() == [True, False, False, True]
