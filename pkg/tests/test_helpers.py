import math
import pypezzo.utils.helpers as hlp


def test_mapSlices():
    # Test pypezzo.utils.helpers.mapSlices in process and through a pool
    assert hlp.mapSlices(math.factorial, range(8)) == [math.factorial(n) for n in range(8)]
    assert hlp.mapSlices(math.factorial, range(8), workers=2) == [math.factorial(n) for n in range(8)]
    assert hlp.mapSlices(math.factorial, []) == []


def test_exactTotal():
    assert hlp.exactTotal([2**70, 1, -(2**70)]) == 1
    assert hlp.exactTotal([0.1] * 10) == 1.0


def test_stableHash():
    first = hlp.stableHash({"B": 10, "seed": 0})
    assert first == hlp.stableHash({"seed": 0, "B": 10})
    assert first != hlp.stableHash({"B": 11, "seed": 0})
    assert len(first) == 64


def test_phaseTimer():
    timer = hlp.phaseTimer()
    with timer.phase("count"):
        pass
    with timer.phase("count"):
        pass
    with timer.phase("sieve"):
        pass
    assert sorted(timer) == ["count", "sieve"]
    assert timer.total == timer["count"] + timer["sieve"]
    assert isinstance(timer, dict)
