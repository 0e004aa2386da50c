"""Exact and floating-point linear algebra for periodic banded matrices.

A periodic banded matrix is banded (odd bandwidth k) with two wrap-around
corner entries at (1, n) and (n, 1); its anti-banded mirror is the
column-reversed image.  The package factors such matrices with a
specialized Doolittle LU whose factors keep the band structure plus one
full last row/column, and builds determinants, inverses, and linear-system
solutions on top of the factors in O(n k^2) + output cost.

Exact mode computes over arbitrary-precision rationals; zero band edges
and zero pivots are replaced by a symbolic perturbation that is driven to
zero only after all cancellation has happened exactly, so exact results
are exact even on degenerate inputs.  Float mode is fast IEEE arithmetic
that refuses degenerate inputs instead of guessing.  An independent dense
reference implementation (:mod:`perioband.oracle`) cross-checks everything.
"""

from .errors import (
    DimensionMismatchError,
    FormatError,
    InternalInconsistencyError,
    InvalidBandwidthError,
    LengthMismatchError,
    PatternViolationError,
    PerioBandError,
    PoleAtZeroError,
    SingularMatrixError,
    ZeroPivotError,
)
from .inversion import invert, invert_anti
from .lu import LUFactors, determinant, factorize
from .matrices import (
    AntiPeriodicBandMatrix,
    DenseMatrix,
    ExchangeOperator,
    PeriodicBandMatrix,
)
from .scalars import (
    EXACT,
    FLOAT,
    Polynomial,
    Rational,
    RationalFunction,
    ScalarMode,
    rational,
)
from .solve import SolveOutcome, solve

__version__ = "0.1.0"

__all__ = [
    "PeriodicBandMatrix",
    "AntiPeriodicBandMatrix",
    "DenseMatrix",
    "ExchangeOperator",
    "LUFactors",
    "factorize",
    "determinant",
    "invert",
    "invert_anti",
    "solve",
    "SolveOutcome",
    "Rational",
    "rational",
    "Polynomial",
    "RationalFunction",
    "ScalarMode",
    "EXACT",
    "FLOAT",
    "PerioBandError",
    "FormatError",
    "SingularMatrixError",
    "ZeroPivotError",
    "PoleAtZeroError",
    "InternalInconsistencyError",
    "InvalidBandwidthError",
    "LengthMismatchError",
    "PatternViolationError",
    "DimensionMismatchError",
    "__version__",
]
