import random
from pathlib import Path
import numpy as np
import pytest
import pypezzo.forms.quartic as qua
import pypezzo.forms.smooth as smo
from pypezzo.utils.errors import budgetExceeded, invalidModulus, malformedForm, overflowError

F0 = qua.KLEIN_QUARTIC
FDIAG = qua.DIAGONAL_QUARTIC


# pypezzo.forms.quartic


class Test_Parse:
    """
    Test pypezzo.forms.quartic.parseForm and loadForm
    """

    def test_Klein(self):
        F = qua.parseForm('{"3,1,0": 1, "0,3,1": 1, "1,0,3": 1}')
        assert F == F0
        assert F.coefficient(3, 1, 0) == 1
        assert F.coefficient(4, 0, 0) == 0
        assert len(F.coeffs) == 15

    def test_Diagonal(self):
        assert qua.parseForm({"4,0,0": 1, "0,4,0": 1, "0,0,4": -1}) == FDIAG

    def test_WrongDegree(self):
        with pytest.raises(malformedForm):
            qua.parseForm('{"2,1,0": 1}')

    def test_DuplicateKeys(self):
        with pytest.raises(malformedForm):
            qua.parseForm('{"3,1,0": 1, "3,1,0": 2}')
        with pytest.raises(malformedForm):
            qua.parseForm('{"3,1,0": 1, "3, 1, 0": 2}')

    def test_Rejects(self):
        for text in ('{"4,0,0": 0}', '{"4,0,0": 1.5}', '{"4,0": 1}', "[1, 2]", "{nope", '{"4,0,0": true}'):
            with pytest.raises(malformedForm):
                qua.parseForm(text)

    def test_JsonRoundTrip(self, tmp_path):
        path = tmp_path / "klein.json"
        path.write_text('{"3,1,0": 1, "0,3,1": 1, "1,0,3": 1}', encoding="utf-8")
        F = qua.loadForm(path)
        assert F == F0
        assert qua.parseForm(F.toJson()) == F
        assert "1*x1^3*x2" in str(F)

    def test_ShippedForms(self):
        forms = Path(__file__).resolve().parents[1] / "forms"
        assert qua.loadForm(forms / "diagonal.json") == qua.DIAGONAL_QUARTIC
        assert qua.loadForm(forms / "klein.json") == F0


class Test_Evaluate:
    """
    Test evaluate, evaluateMod and the numpy grid evaluators against each other
    """

    def test_Examples(self):
        assert qua.evaluate(F0, (1, 1, 1)) == 3
        assert qua.evaluate(F0, (2, 1, 0)) == 8
        assert qua.evaluate(FDIAG, (1, 1, 1)) == 1

    def test_Overflow(self):
        assert qua.evaluate(F0, (2**40, 1, 0)) == 2**120
        with pytest.raises(overflowError):
            qua.evaluate(F0, (2**40, 1, 0), bits=64)
        with pytest.raises(overflowError):
            qua.evaluate(F0, (2**33, 2**33, 0))

    def test_EvaluateMod(self):
        assert qua.evaluateMod(F0, (0, 0, 0), 7) == 0
        assert qua.evaluateMod(F0, (1, 1, 1), 3) == 0
        rng = random.Random(0)
        for _ in range(100):
            m = rng.randrange(1, 60)
            beta = [rng.randrange(-50, 50) for _ in range(3)]
            t = [rng.randrange(-5, 5) for _ in range(3)]
            shifted = [b + m * s for b, s in zip(beta, t)]
            assert qua.evaluateMod(F0, shifted, m) == qua.evaluateMod(F0, beta, m)

    def test_ModAgreesWithExact(self):
        r = range(-10, 11)
        for m in (3, 5, 7, 9, 15):
            for x in ((a, b, c) for a in r for b in r for c in r):
                assert qua.evaluateMod(F0, x, m) == qua.evaluate(F0, x) % m

    def test_HomogeneousAndEven(self):
        rng = random.Random(1)
        for _ in range(100):
            lam = rng.randrange(-20, 21)
            x = [rng.randrange(-100, 101) for _ in range(3)]
            value = qua.evaluate(F0, x)
            assert qua.evaluate(F0, [lam * v for v in x]) == lam**4 * value
            assert qua.evaluate(F0, [-v for v in x]) == value

    def test_SliceValues(self):
        axis = np.arange(-3, 4, dtype=np.int64)
        for x1 in range(-3, 4):
            grid = qua.sliceValues(F0, x1, axis)
            wide = qua.sliceValues(F0, x1, axis, wide=True)
            for i, x2 in enumerate(axis):
                for j, x3 in enumerate(axis):
                    expected = qua.evaluate(F0, (x1, x2, x3))
                    assert grid[i, j] == expected
                    assert wide[i, j] == expected

    def test_ResidueGrids(self):
        m = 9
        grid = qua.residueGrid(F0, m)
        chart = qua.chartGrid(F0, m)
        line = qua.lineValues(F0, m)
        for b1, b2, b3 in np.ndindex(m, m, m):
            assert grid[b1, b2, b3] == qua.evaluateMod(F0, (b1, b2, b3), m)
        for b2, b3 in np.ndindex(m, m):
            assert chart[b2, b3] == qua.evaluateMod(F0, (1, b2, b3), m)
        for b3 in range(m):
            assert line[b3] == qua.evaluateMod(F0, (0, 1, b3), m)

    def test_Width(self):
        assert qua.heightBound(F0, 10) == 15 * 10**4
        assert qua.fitsInt64(F0, 10**4)
        assert not qua.fitsInt64(F0, 2**15)


class Test_Shape:
    def test_DiagonalZero(self):
        assert qua.isDiagonalZero(F0)
        assert not qua.isDiagonalZero(FDIAG)
        assert qua.isDiagonalZero(qua.parseForm({"2,2,0": 1}))

    def test_Partials(self):
        d1, d2, d3 = qua.partials(F0)
        assert d1 == {(2, 1, 0): 3, (0, 0, 3): 1}
        assert d2 == {(3, 0, 0): 1, (0, 2, 1): 3}
        assert d3 == {(0, 3, 0): 1, (1, 0, 2): 3}

    def test_LatticeTriple(self):
        x = qua.latticeTriple(1, -2, 3)
        assert x.scaled(2) == (2, -4, 6)
        assert x.reduced(5) == (1, 3, 3)
        assert x.dot((1, 1, 1)) == 2
        assert -x == (-1, 2, -3)


# pypezzo.forms.smooth


class Test_Smooth:
    """
    Test pypezzo.forms.smooth
    """

    def test_Klein(self):
        assert smo.isSmoothModP(F0, 3)
        assert smo.isSmoothModP(F0, 5)
        assert smo.isSmoothModP(F0, 11)

    def test_KleinBadPrime(self):
        # the Klein quartic has bad reduction at 7 only
        assert not smo.isSmoothModP(F0, 7)

    def test_Singular(self):
        F = qua.parseForm({"2,2,0": 1})
        assert not smo.isSmoothModP(F, 5)
        assert (0, 0, 1) in smo.singularPoints(F, 5)

    def test_Budget(self):
        with pytest.raises(budgetExceeded):
            smo.isSmoothModP(F0, 103)
        assert smo.isSmoothModP(F0, 103, budget=103)

    def test_NotPrime(self):
        with pytest.raises(invalidModulus):
            smo.isSmoothModP(F0, 9)
