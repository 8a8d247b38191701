from pypezzo.poisson.check import decayRadius, poissonCheck, poissonResult
from pypezzo.poisson.integral import axisTransform, oscIntegral, oscValue
from pypezzo.poisson.weight import bumpEval, bumpWeight, boxWeight, canonicalWeight
