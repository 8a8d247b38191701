import random
import numpy as np
import pytest
import pypezzo.sums as sums
import pypezzo.sums.dual as dua
import pypezzo.sums.multiplicative as mul
import pypezzo.sums.naive as nai
import pypezzo.sums.reduced as red
import pypezzo.sums.scan as sca
import pypezzo.sums.square as squ
import pypezzo.sums.table as tab
import pypezzo.sums.values as val
from pypezzo.forms.quartic import DIAGONAL_QUARTIC, KLEIN_QUARTIC
from pypezzo.utils.errors import budgetExceeded, invalidModulus, nonCoprime

F0 = KLEIN_QUARTIC
TOL = 1e-9


def _close(value, exact):
    return abs(value.re - exact) <= TOL and abs(value.im) <= TOL


# pypezzo.sums.values


class Test_Values:
    def test_Precision(self):
        with pytest.raises(ValueError):
            val.setPrecision(79)
        val.setPrecision(96)
        assert val.settings["precision"] == 96

    def test_Integer(self):
        value = val.charsumValue.fromInteger(-27, 9, (1, 2, 3))
        assert value.rounded() == -27
        assert abs(value) == 27
        assert value.ratio() == pytest.approx(1.0)
        assert complex(value) == -27
        assert value.isReal()

    def test_Fold(self):
        # one unit of weight on every phase class sums to zero
        value = val.foldPhases([1] * 7, 7, (1, 0, 0))
        assert value.rounded() == 0
        value = val.foldPhases([5, 0, 0], 3, (0, 0, 0))
        assert value.rounded() == 5


# pypezzo.sums.naive and pypezzo.sums.reduced


class Test_Naive:
    """
    Test pypezzo.sums.naive
    """

    def test_Anchor(self):
        assert nai.charsum(F0, 3, (0, 0, 0)).rounded() == -6

    def test_TrivialModulus(self):
        assert nai.charsum(F0, 1, (5, 7, 9)).rounded() == 1

    def test_Real(self):
        for m in (3, 5, 9, 15):
            for x in ((0, 0, 0), (1, 0, 0), (1, 2, 3), (4, 4, 1)):
                assert nai.charsum(F0, m, x).isReal()

    def test_Bounds(self):
        for x in ((0, 0, 0), (1, 2, 3)):
            assert abs(nai.charsum(F0, 9, x)) <= 9**3

    def test_Periodic(self):
        for x in ((1, 2, 3), (0, 5, 6)):
            shifted = tuple(v + 7 * t for v, t in zip(x, (1, -2, 3)))
            assert nai.charsum(F0, 7, x).close(nai.charsum(F0, 7, shifted))

    def test_ScalingInvariance(self):
        for lam in (2, 4, 7):
            for x in ((1, 0, 0), (1, 2, 3)):
                scaled = tuple(lam * v for v in x)
                assert nai.charsum(F0, 15, x).close(nai.charsum(F0, 15, scaled))

    def test_Budget(self):
        with pytest.raises(budgetExceeded):
            nai.charsum(F0, 47, (0, 0, 0))
        with pytest.raises(invalidModulus):
            nai.charsum(F0, 4, (0, 0, 0))


class Test_Reduced:
    """
    Test pypezzo.sums.reduced against the naive triple sum
    """

    def test_Anchor(self):
        value = red.charsum(F0, 3, (0, 0, 0))
        assert value.exact == -6

    def test_OracleSmall(self):
        for p in (3, 5, 7):
            for x in np.ndindex(p, p, p):
                assert _close(nai.charsum(F0, p, x), red.charsum(F0, p, x).exact)

    def test_OracleSuite(self):
        rows, summary = sca.oracleGrid(F0)
        assert summary["passed"]
        assert summary["rows"] == sum(p**3 for p in (3, 5, 7, 11, 13))
        assert summary["max_deviation"] <= TOL

    def test_OtherForm(self):
        for x in np.ndindex(5, 5, 5):
            assert _close(nai.charsum(DIAGONAL_QUARTIC, 5, x), red.charsum(DIAGONAL_QUARTIC, 5, x).exact)

    def test_KatzBound(self):
        rng = random.Random(0)
        primes = [p for p in range(3, 98) if all(p % d for d in range(2, p))]
        for _ in range(500):
            p = rng.choice(primes)
            x = (rng.randrange(p), rng.randrange(p), rng.randrange(p))
            assert abs(red.charsum(F0, p, x)) <= 27 * p**1.5

    def test_KatzSuite(self):
        rows, summary = sca.katzScan(F0, samples=20, seed=0)
        assert summary["passed"]
        assert summary["max_ratio_smooth"] <= 27
        assert not any(row["smooth"] for row in rows if row["p"] == 7)
        assert all(row["smooth"] for row in rows if row["p"] == 11)

    def test_KatzSuiteSeeded(self):
        first = sca.katzScan(F0, limit=31, samples=10, seed=5)
        second = sca.katzScan(F0, limit=31, samples=10, seed=5)
        assert first == second

    def test_NotPrime(self):
        with pytest.raises(invalidModulus):
            red.charsum(F0, 9, (0, 0, 0))


# pypezzo.sums.multiplicative


class Test_Multiplicative:
    """
    Test pypezzo.sums.multiplicative with both frequency conventions
    """

    def test_Fifteen(self):
        for x in ((0, 0, 0), (1, 0, 0), (1, 2, 3)):
            slow = nai.charsum(F0, 15, x)
            for convention in ("reduced", "twisted"):
                assert _close(slow, mul.charsum(F0, 15, x, convention=convention).exact)

    def test_SingleFactor(self):
        for x in ((0, 0, 0), (2, 1, 4)):
            assert mul.charsum(F0, 7, x).exact == red.charsum(F0, 7, x).exact

    def test_One(self):
        assert mul.charsum(F0, 1, (3, 3, 3)).exact == 1

    def test_Suite(self):
        rows, summary = sca.multiplicativity(F0, samples=40, seed=0)
        assert summary["passed"]
        assert all(row["reduced"] == row["twisted"] for row in rows)

    def test_Errors(self):
        with pytest.raises(nonCoprime):
            mul.charsum(F0, 15, (0, 0, 0), factors=[3, 3])
        with pytest.raises(invalidModulus):
            mul.factorSquarefree(45)
        with pytest.raises(invalidModulus):
            mul.charsum(F0, 21, (0, 0, 0), factors=[3, 5])
        with pytest.raises(ValueError):
            mul.charsum(F0, 15, (0, 0, 0), convention="sideways")


# pypezzo.sums.dual


class Test_Dual:
    """
    Test the dual sums at pypezzo.sums.dual
    """

    def test_Examples(self):
        assert dua.charsumClosed(F0, 3, (1, 1, 1)).exact == 0
        assert dua.charsumClosed(F0, 3, (1, 1, 0)).exact == 27
        assert _close(dua.charsumNaive(F0, 3, (1, 1, 1)), 0)
        assert _close(dua.charsumNaive(F0, 3, (1, 1, 0)), 27)

    def test_Collapse(self):
        for x in np.ndindex(3, 3, 3):
            assert _close(dua.charsumNaive(F0, 3, x), dua.charsumClosed(F0, 3, x).exact)

    def test_Bound(self):
        for p in (3, 5, 7):
            for x in np.ndindex(p, p, p):
                assert abs(dua.charsumClosed(F0, p, x)) <= p**3

    def test_Scaling(self):
        for x in ((1, 1, 0), (2, 3, 4)):
            for lam in (2, 3, 4):
                scaled = tuple(lam * v for v in x)
                assert abs(dua.charsumClosed(F0, 5, scaled)) == abs(dua.charsumClosed(F0, 5, x))

    def test_Suite(self):
        rows, summary = sca.dualCollapse(F0, samples=10, seed=0)
        assert summary["passed"]
        assert all(row["ratio_to_p3"] <= 1 for row in rows)

    def test_Composite(self):
        for x in ((0, 0, 0), (1, 1, 0), (1, 2, 3), (7, 4, 2)):
            direct = dua.compositeNaive(F0, 3, 5, x)
            twisted = dua.compositeSplit(F0, 3, 5, x).exact
            plain = dua.compositeSplit(F0, 3, 5, x, twisted=False).exact
            assert twisted == plain
            assert _close(direct, twisted)

    def test_Errors(self):
        with pytest.raises(budgetExceeded):
            dua.charsumNaive(F0, 17, (0, 0, 0))
        with pytest.raises(nonCoprime):
            dua.compositeSplit(F0, 5, 5, (0, 0, 0))


# pypezzo.sums.square


class Test_PrimeSquare:
    def test_Examples(self):
        assert squ.collapse(3, (9, 9, 9)) == 729
        assert squ.collapse(3, (1, 0, 0)) == 0
        assert squ.collapse(3, (9, 18, 0)) == 729

    def test_Direct(self):
        for x in ((9, 9, 9), (1, 0, 0), (9, 18, 0), (3, 0, 0)):
            assert squ.collapseDirect(3, x).rounded() == squ.collapse(3, x)

    def test_Suite(self):
        rows, summary = sca.primeSquare()
        assert summary["passed"]

    def test_PrincipalDefect(self):
        # only the p^3 N0 lifts of the zeros of F mod 3 are missing, N0 = 9 for the Klein quartic
        assert squ.withPrincipal(F0, 3, (0, 0, 0)).rounded() == 486
        assert squ.collapseDefect(F0, 3, (0, 0, 0)) == -243

    def test_Budget(self):
        with pytest.raises(budgetExceeded):
            squ.collapseDirect(11, (0, 0, 0))


# pypezzo.sums.table and the default methods


class Test_Table:
    def test_AgainstNaive(self):
        table = tab.charsumTable(F0, 5)
        for k in np.ndindex(5, 5, 5):
            assert abs(table[k] - complex(nai.charsum(F0, 5, k))) <= TOL

    def test_Trivial(self):
        table = tab.charsumTable(F0, 3, trivial=True)
        assert abs(table[0, 0, 0] - 27) <= TOL
        table = np.array(table)
        table[0, 0, 0] = 0
        assert np.abs(table).max() <= TOL


class Test_Default:
    """
    Test the default methods at pypezzo.sums
    """

    def test_Routing(self):
        assert sums.charsum(F0, 3, (0, 0, 0)).exact == -6
        assert sums.charsum(F0, 1, (0, 0, 0)).exact == 1
        assert sums.charsum(F0, 15, (1, 2, 3)).exact is not None
        assert sums.charsum(F0, 9, (1, 2, 3)).exact is None

    def test_Wrappers(self):
        x = (1, 2, 3)
        assert sums.charsumPrimeReduced(F0, 5, x).exact == red.charsum(F0, 5, x).exact
        assert sums.charsumNaive(F0, 5, x).close(nai.charsum(F0, 5, x))
        assert sums.charsumPrimeSquareTrivial(3, (9, 9, 9)) == 729
        assert sums.dualCharsumClosed(F0, 3, (1, 1, 0)).exact == 27
        assert sums.dualCharsumCompositeSplit(F0, 3, 5, x).exact == (
            dua.compositeSplit(F0, 3, 5, x).exact
        )
