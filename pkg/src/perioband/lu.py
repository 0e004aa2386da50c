"""Doolittle LU factorization specialized to periodic banded matrices.

The factors inherit the input's sparsity apart from the wrap-around
corners: L is unit lower triangular with the band of half-width h plus a
full last row, U is upper triangular with the band plus a full last
column.  Entries are produced row by row; within row i the subdiagonal
entries come first (left to right), then the pivot u(i,i), then the
superdiagonal band entries, then the last-column entry u(i,n).  Row n is
the full last row of L followed by u(n,n).

Zeros that would break the recurrences are handled per mode:

* exact mode replaces a zero band-edge entry a(i, i+h) (for
  i <= n-(k+1)/2) or a(i, i-h) (for i >= (k+3)/2), and any pivot that
  comes out identically zero, by the perturbation symbol; arithmetic
  continues in the rational-function field and the perturbation is
  evaluated away at 0 by the callers once all cancellation has happened.
  Exact factorization therefore never fails.
* float mode refuses: any zero (within tolerance, relative to the row's
  largest entry) at those positions raises :class:`ZeroPivotError`
  directing the user to exact mode, because a finite epsilon carries no
  cancellation guarantee.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InternalInconsistencyError, PoleAtZeroError, ZeroPivotError
from .matrices import DenseMatrix, PeriodicBandMatrix
from .scalars import EXACT, Rational, RationalFunction, ScalarMode

__all__ = ["LUFactors", "factorize", "determinant", "perturbed_working_copy",
           "lift_to_functions"]

#: Substitution site tags: zero upper band edge (a(i, i+h)), zero lower band
#: edge (a(i, i-h)), and pivot that came out identically zero.
UPPER_EDGE = "upper_edge"
LOWER_EDGE = "lower_edge"
PIVOT = "pivot"


@dataclass(frozen=True)
class LUFactors:
    """Factors of a periodic banded matrix, stored one sequence per offset.

    ``lower[d]`` (d in [-h, -1]) holds l(i, i+d) indexed by column, i.e.
    entry j-1 is l(j-d... ) -- concretely ``lower[d][j - 1] == l(i, j)``
    with ``j = i + d``.  ``upper[d]`` (d in [1, h]) holds u(i, i+d) indexed
    by row i-1.  ``diag`` is u(i,i) for i = 1..n, ``upper_last`` is u(i,n)
    for i < n, ``lower_last`` is l(n,j) for j < n.  L's unit diagonal is
    implicit.  When ``substitutions`` is empty the product of the factors
    reproduces the input matrix entry for entry; otherwise it reproduces
    the perturbed working copy, which coincides with the input at 0.
    """

    n: int
    k: int
    mode: ScalarMode
    lower: dict
    lower_last: tuple
    upper: dict
    diag: tuple
    upper_last: tuple
    substitutions: frozenset = field(default_factory=frozenset)

    @property
    def h(self) -> int:
        return (self.k - 1) // 2

    @property
    def perturbed(self) -> bool:
        return bool(self.substitutions)

    def l_get(self, i: int, j: int):
        """l(i, j) with the zero convention outside the stored pattern."""
        if j >= i or j < 1:
            return 0
        if i == self.n:
            return self.lower_last[j - 1]
        if i - j <= self.h:
            return self.lower[j - i][j - 1]
        return 0

    def u_get(self, i: int, j: int):
        """u(i, j) with the zero convention outside the stored pattern."""
        if j < i or j > self.n:
            return 0
        if j == self.n:
            return self.diag[-1] if i == self.n else self.upper_last[i - 1]
        d = j - i
        if d == 0:
            return self.diag[i - 1]
        if d <= self.h:
            return self.upper[d][i - 1]
        return 0

    def lower_dense(self) -> DenseMatrix:
        n = self.n
        one = 1.0 if not self.mode.is_exact else Rational(1)
        return DenseMatrix.from_rows(
            [[one if i == j else self.l_get(i, j) for j in range(1, n + 1)]
             for i in range(1, n + 1)])

    def upper_dense(self) -> DenseMatrix:
        n = self.n
        return DenseMatrix.from_rows(
            [[self.u_get(i, j) for j in range(1, n + 1)]
             for i in range(1, n + 1)])


class _RestartPerturbed(Exception):
    """Plain exact lane found an identically zero pivot; redo with symbols."""


def _edge_substitution_sites(m: PeriodicBandMatrix):
    """Rows whose band-edge entries are zero, per the two substitution rules."""
    n, h = m.n, m.h
    upper = [i for i in range(1, n - h) if m.band_get(i, h) == 0]
    lower = [i for i in range(h + 2, n + 1) if m.band_get(i, -h) == 0]
    return upper, lower


def perturbed_working_copy(m: PeriodicBandMatrix):
    """The working copy factorization actually runs on, plus the edge
    substitutions applied to it.

    If any band-edge entry needed replacing, every entry is lifted into the
    rational-function field and the zero edges become the perturbation
    symbol; otherwise the caller's matrix is returned unchanged.  The
    caller's matrix is never mutated.
    """
    upper_rows, lower_rows = _edge_substitution_sites(m)
    subs = {(UPPER_EDGE, i) for i in upper_rows}
    subs |= {(LOWER_EDGE, i) for i in lower_rows}
    if not subs:
        return m, frozenset()
    return lift_to_functions(m, upper_rows, lower_rows), frozenset(subs)


def lift_to_functions(m: PeriodicBandMatrix, upper_rows=(),
                      lower_rows=()) -> PeriodicBandMatrix:
    """Copy of ``m`` with every entry lifted into the rational-function
    field, the given band-edge rows replaced by the perturbation symbol."""
    sym = RationalFunction.symbol()
    h = m.h
    diagonals = {}
    for d, seq in m.diagonals.items():
        lifted = [RationalFunction.constant(v) for v in seq]
        if d == h:
            for i in upper_rows:
                lifted[i - 1] = sym
        elif d == -h:
            for i in lower_rows:
                lifted[i - h - 1] = sym
        diagonals[d] = lifted
    return PeriodicBandMatrix(m.n, m.k, diagonals,
                              RationalFunction.constant(m.corner_1n),
                              RationalFunction.constant(m.corner_n1))


def factorize(m: PeriodicBandMatrix) -> LUFactors:
    """Factor a periodic banded matrix into unit-lower L and upper U.

    Exact mode always succeeds (see module docstring); float mode raises
    :class:`ZeroPivotError` on zero band edges or below-tolerance pivots.
    """
    if not m.mode.is_exact:
        return _factorize_float(m)
    work, edge_subs = perturbed_working_copy(m)
    if edge_subs:
        return _factorize_exact(work, m.mode, edge_subs, allow_pivot_sub=True)
    try:
        return _factorize_exact(m, m.mode, frozenset(), allow_pivot_sub=False)
    except _RestartPerturbed:
        lifted = lift_to_functions(m)
        return _factorize_exact(lifted, m.mode, frozenset(), allow_pivot_sub=True)


def _factorize_exact(work: PeriodicBandMatrix, mode: ScalarMode,
                     edge_subs: frozenset, allow_pivot_sub: bool) -> LUFactors:
    n, h = work.n, work.h
    low = {d: [0] * (n - 1 + d) for d in range(-h, 0)}
    up = {d: [0] * (n - 1 - d) for d in range(1, h + 1)}
    diag = [0] * n
    ulast = [0] * (n - 1)
    lown = [0] * (n - 1)
    pivot_subs = []
    sym = RationalFunction.symbol()

    def a(i, j):
        d = j - i
        if -h <= d <= h:
            return work.band_get(i, d)
        if i == 1 and j == n:
            return work.corner_1n
        if i == n and j == 1:
            return work.corner_n1
        return 0

    for i in range(1, n):
        rlo = max(1, i - h)
        for r in range(rlo, i):
            s = a(i, r)
            for j in range(rlo, r):
                s = s - low[j - i][j - 1] * up[r - j][j - 1]
            low[r - i][r - 1] = s / diag[r - 1]
        s = a(i, i)
        for j in range(rlo, i):
            s = s - low[j - i][j - 1] * up[i - j][j - 1]
        if s == 0:
            if not allow_pivot_sub:
                raise _RestartPerturbed
            s = sym
            pivot_subs.append(i)
        diag[i - 1] = s
        for r in range(i + 1, min(i + h, n - 1) + 1):
            s = a(i, r)
            for j in range(max(1, r - h), i):
                s = s - low[j - i][j - 1] * up[r - j][j - 1]
            up[r - i][i - 1] = s
        s = a(i, n)
        for j in range(rlo, i):
            s = s - low[j - i][j - 1] * ulast[j - 1]
        ulast[i - 1] = s
    for i in range(1, n):
        s = a(n, i)
        for j in range(max(1, i - h), i):
            s = s - lown[j - 1] * up[i - j][j - 1]
        lown[i - 1] = s / diag[i - 1]
    s = a(n, n)
    for j in range(1, n):
        s = s - lown[j - 1] * ulast[j - 1]
    if s == 0:
        if not allow_pivot_sub:
            raise _RestartPerturbed
        s = sym
        pivot_subs.append(n)
    diag[n - 1] = s

    subs = edge_subs | {(PIVOT, i) for i in pivot_subs}
    return LUFactors(
        n=n, k=work.k, mode=mode,
        lower={d: tuple(v) for d, v in low.items()},
        lower_last=tuple(lown),
        upper={d: tuple(v) for d, v in up.items()},
        diag=tuple(diag),
        upper_last=tuple(ulast),
        substitutions=frozenset(subs),
    )


def _factorize_float(m: PeriodicBandMatrix) -> LUFactors:
    n, h = m.n, m.h
    tol = m.mode.zero_tolerance
    diags = m.diagonals

    scale = [0.0] * (n + 1)
    for d in range(-h, h + 1):
        seq = diags[d]
        for idx, v in enumerate(seq):
            i = idx + 1 if d >= 0 else idx + 1 - d
            av = abs(v)
            if av > scale[i]:
                scale[i] = av
    if abs(m.corner_1n) > scale[1]:
        scale[1] = abs(m.corner_1n)
    if abs(m.corner_n1) > scale[n]:
        scale[n] = abs(m.corner_n1)

    sup = diags[h]
    for i in range(1, n - h):
        if abs(sup[i - 1]) <= tol * scale[i]:
            raise ZeroPivotError(
                f"zero band-edge entry at ({i}, {i + h}); rerun with --mode exact")
    sub = diags[-h]
    for i in range(h + 2, n + 1):
        if abs(sub[i - h - 1]) <= tol * scale[i]:
            raise ZeroPivotError(
                f"zero band-edge entry at ({i}, {i - h}); rerun with --mode exact")

    # Same recurrences as the exact lane, kept as flat loops over per-offset
    # lists; this path must stay fast at n ~ 1e5.
    low = [[0.0] * (n - 1 + d) for d in range(-h, 0)]       # low[d + h]
    up = [[0.0] * (n - 1 - d) for d in range(1, h + 1)]     # up[d - 1]
    diag = [0.0] * n
    ulast = [0.0] * (n - 1)
    lown = [0.0] * (n - 1)
    a = [diags[d] for d in range(-h, h + 1)]                # a[d + h]
    c1n, cn1 = m.corner_1n, m.corner_n1

    for i in range(1, n):
        im1 = i - 1
        rlo = i - h if i > h else 1
        for r in range(rlo, i):
            s = a[r - i + h][r - 1]
            for j in range(rlo, r):
                du = r - j
                s -= low[j - i + h][j - 1] * (diag[j - 1] if du == 0
                                              else up[du - 1][j - 1])
            low[r - i + h][r - 1] = s / diag[r - 1]
        s = a[h][im1]
        for j in range(rlo, i):
            s -= low[j - i + h][j - 1] * up[i - j - 1][j - 1]
        if abs(s) <= tol * scale[i]:
            raise ZeroPivotError(
                f"pivot {i} is zero within tolerance; rerun with --mode exact")
        diag[im1] = s
        rhi = i + h if i + h < n - 1 else n - 1
        for r in range(i + 1, rhi + 1):
            s = a[r - i + h][im1]
            jlo = r - h if r > h else 1
            for j in range(jlo, i):
                s -= low[j - i + h][j - 1] * up[r - j - 1][j - 1]
            up[r - i - 1][im1] = s
        if i == 1:
            s = c1n
        elif i >= n - h:
            s = a[n - i + h][im1]
        else:
            s = 0.0
        for j in range(rlo, i):
            s -= low[j - i + h][j - 1] * ulast[j - 1]
        ulast[im1] = s
    for i in range(1, n):
        if i == 1:
            s = cn1
        elif i >= n - h:
            s = a[i - n + h][i - 1]
        else:
            s = 0.0
        jlo = i - h if i > h else 1
        for j in range(jlo, i):
            s -= lown[j - 1] * up[i - j - 1][j - 1]
        lown[i - 1] = s / diag[i - 1]
    s = a[h][n - 1]
    for j in range(1, n):
        s -= lown[j - 1] * ulast[j - 1]
    if abs(s) <= tol * scale[n]:
        raise ZeroPivotError(
            f"pivot {n} is zero within tolerance; rerun with --mode exact")
    diag[n - 1] = s

    return LUFactors(
        n=n, k=m.k, mode=m.mode,
        lower={d - h: tuple(low[d]) for d in range(h)},
        lower_last=tuple(lown),
        upper={d + 1: tuple(up[d]) for d in range(h)},
        diag=tuple(diag),
        upper_last=tuple(ulast),
        substitutions=frozenset(),
    )


def determinant(factors: LUFactors):
    """Determinant as the product of the pivots, evaluated exactly.

    Exact mode returns a rational (0 for a singular matrix, never an
    error); float mode returns a float.  With substitutions present the
    pivot product is a polynomial in the perturbation symbol by
    construction, so a pole during evaluation indicates a bug and raises
    :class:`InternalInconsistencyError`.
    """
    if not factors.mode.is_exact:
        prod = 1.0
        for u in factors.diag:
            prod *= u
        return prod
    prod = Rational(1)
    for u in factors.diag:
        prod = u * prod
    if isinstance(prod, RationalFunction):
        try:
            return prod.at_zero()
        except PoleAtZeroError as exc:
            raise InternalInconsistencyError(
                "pivot product has a pole at 0; this cannot happen for a "
                "correctly perturbed factorization") from exc
    return prod
