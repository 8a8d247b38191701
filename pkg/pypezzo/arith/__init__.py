from pypezzo.arith.crt import crtCombine, crtSplit, inverseMod
from pypezzo.arith.primes import dyadicWindow, isPrime, oddPrimesIn, primesIn, setCacheDir
from pypezzo.arith.roots import exactIsqrt, isSquareArray
from pypezzo.arith.symbols import eulerCriterion, jacobi, jacobiArray, jacobiTable
