from pypezzo.sieve.budget import budgetReport, exponentBudget, optimizeBudget, termBudget
from pypezzo.sieve.count import bruteCount, countGrid, countReport
from pypezzo.sieve.detector import detectorDirect, detectorSum, sieveReport, sieveRhs
from pypezzo.sieve.fit import exponentFit, fitCounts, fitReport
from pypezzo.sieve.mainsum import decomposeSharpTerms, mainsumDirect, mainsumSplit, pairTensor
from pypezzo.sieve.plan import admissibility, makePlan, sievePlan
