"""Exception types shared across the package.

Contract violations on arguments raise :class:`ValueError` subclasses so they
behave like ordinary Python misuse; domain outcomes (singular input, float
refusal, evaluation poles) get their own hierarchy under
:class:`PerioBandError` so callers can dispatch on them.
"""

__all__ = [
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
]


class PerioBandError(Exception):
    """Base class for domain errors raised by this package."""


class FormatError(PerioBandError):
    """A matrix or vector file does not conform to its declared format."""


class SingularMatrixError(PerioBandError):
    """The input matrix is singular; no inverse or unique solution exists."""

    def __init__(self, message: str = "Singular Matrix"):
        super().__init__(message)


class ZeroPivotError(PerioBandError):
    """Float mode hit a zero (or below-tolerance) pivot or band-edge entry.

    Float arithmetic has no sound analogue of the exact-mode symbolic
    perturbation, so the computation is refused rather than continued with
    an unquantifiable error.  Rerun in exact mode.
    """


class PoleAtZeroError(PerioBandError, ArithmeticError):
    """A rational function diverges as the perturbation symbol goes to zero."""


class InternalInconsistencyError(PerioBandError):
    """An invariant the algorithm guarantees was violated; indicates a bug."""


class InvalidBandwidthError(ValueError):
    """Bandwidth k is even, too small, or incompatible with the order n."""


class LengthMismatchError(ValueError):
    """A stored diagonal or entry sequence has the wrong number of elements."""


class PatternViolationError(ValueError):
    """A dense matrix has a nonzero entry outside the banded-plus-corners
    pattern (first offending position is reported 1-based)."""

    def __init__(self, i: int, j: int):
        super().__init__(f"nonzero entry outside pattern at ({i}, {j})")
        self.position = (i, j)


class DimensionMismatchError(ValueError):
    """Operand shapes are incompatible."""
