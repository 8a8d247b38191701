__version__ = "0.1.0"

import pypezzo.arith
import pypezzo.forms
import pypezzo.sums
import pypezzo.sieve
import pypezzo.poisson
