"""Exact computation of Naruse-Newton coefficients of permutation descent sets."""

from .errors import (
    CapExceededError,
    ConsistencyError,
    NNLabError,
    PreconditionError,
)
from .exact import Matrix, Polynomial, det_exact, interpolate, newton_expand, solve_exact
from .excite import ExcitedDiagram, enumerate_excited, excited_moves
from .naruse import (
    CoeffSequence,
    ExcitationFactor,
    descent_poly_eval,
    excitation_factor,
    nn_coefficients,
    nn_coefficients_newton,
    skew_syt_count,
    syt_count,
)
from .shapes import Cell, DescentSet, Partition, SkewShape, descent_to_skew, skew_to_descent

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "Cell",
    "CoeffSequence",
    "ConsistencyError",
    "DescentSet",
    "ExcitationFactor",
    "ExcitedDiagram",
    "Matrix",
    "NNLabError",
    "Partition",
    "Polynomial",
    "PreconditionError",
    "SkewShape",
    "descent_poly_eval",
    "descent_to_skew",
    "det_exact",
    "enumerate_excited",
    "excitation_factor",
    "excited_moves",
    "interpolate",
    "newton_expand",
    "nn_coefficients",
    "nn_coefficients_newton",
    "skew_syt_count",
    "skew_to_descent",
    "solve_exact",
    "syt_count",
]
