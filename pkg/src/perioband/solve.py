"""Linear-system solution for periodic banded coefficient matrices.

One LU factorization serves any number of right-hand sides: forward
substitution through unit-lower L (band plus full last row) produces the
intermediate vector z, then back substitution through U (band plus full
last column) produces x.  Exact mode evaluates the perturbation away at 0
in the final x, so the residual is identically zero whenever the matrix
is nonsingular.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatchError, PoleAtZeroError, SingularMatrixError
from .lu import LUFactors, determinant, factorize
from .matrices import PeriodicBandMatrix
from .scalars import RationalFunction, value_at_zero

__all__ = ["SolveOutcome", "solve", "solve_factored"]


@dataclass(frozen=True)
class SolveOutcome:
    """Result of a solve: solution ``x``, forward-substitution intermediate
    ``z``, the determinant, and whether the perturbation lane was used.

    ``x`` and ``z`` are tuples of length n (1-based entry i at index
    i - 1).  On perturbed runs an individual ``z`` entry may diverge as
    the perturbation vanishes even though ``x`` is finite; such entries
    are reported as None.
    """

    x: tuple
    z: tuple
    det: object
    perturbed: bool


def solve(m: PeriodicBandMatrix, y) -> SolveOutcome:
    """Solve M x = y.

    Raises :class:`SingularMatrixError` when det M = 0 (exact mode) and
    :class:`ZeroPivotError` on degenerate float-mode inputs.
    """
    factors = factorize(m)
    return solve_factored(factors, y)


def solve_factored(factors: LUFactors, y) -> SolveOutcome:
    """Solve using an existing factorization (reusable across right-hand
    sides; the factors are immutable)."""
    n, h = factors.n, factors.h
    if len(y) != n:
        raise DimensionMismatchError(f"right-hand side length {len(y)} != {n}")
    det = determinant(factors)
    if factors.mode.is_exact and det == 0:
        raise SingularMatrixError()

    lower, lower_last = factors.lower, factors.lower_last
    upper, diag, upper_last = factors.upper, factors.diag, factors.upper_last

    z = [0] * (n + 1)
    for i in range(1, n):
        s = y[i - 1]
        for j in range(max(1, i - h), i):
            s = s - lower[j - i][j - 1] * z[j]
        z[i] = s
    s = y[n - 1]
    for j in range(1, n):
        s = s - lower_last[j - 1] * z[j]
    z[n] = s

    x = [0] * (n + 1)
    x[n] = z[n] / diag[n - 1]
    for i in range(n - 1, 0, -1):
        s = z[i]
        for j in range(i + 1, min(i + h, n - 1) + 1):
            s = s - upper[j - i][i - 1] * x[j]
        s = s - upper_last[i - 1] * x[n]
        x[i] = s / diag[i - 1]

    if factors.mode.is_exact:
        xs = tuple(value_at_zero(v) for v in x[1:])
        zs = tuple(_intermediate_at_zero(v) for v in z[1:])
    else:
        xs = tuple(x[1:])
        zs = tuple(z[1:])
    return SolveOutcome(x=xs, z=zs, det=det, perturbed=factors.perturbed)


def _intermediate_at_zero(v):
    # z is diagnostic output; a pole here can be legitimate (it cancels in
    # x), so divergent entries are reported as None rather than failing.
    try:
        return value_at_zero(v)
    except PoleAtZeroError:
        return None
