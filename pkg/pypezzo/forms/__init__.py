from pypezzo.forms.quartic import (
    DIAGONAL_QUARTIC,
    KLEIN_QUARTIC,
    evaluate,
    evaluateMod,
    isDiagonalZero,
    latticeTriple,
    loadForm,
    parseForm,
    partials,
    quarticForm,
)
from pypezzo.forms.smooth import isSmoothModP, singularPoints
