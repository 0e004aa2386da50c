"""Full inversion of periodic banded matrices from their LU factors.

The inverse is built column by column.  With T the inverse of unit-lower
L, column r of the inverse solves U * C_r = T * E_r; the band-plus-last-row
sparsity of L means only the last (k-1)/2 columns of T are ever needed,
and back-substituting through U (band plus last column) yields the last
(k+1)/2 columns of the inverse.  Every remaining column then follows from
the identity (inverse) * M = I read at band column j + h:

    C_j = (E_{j+h} - sum_{r=j+1}^{j+k-1} a(r, j+h) * C_r) / a(j, j+h)

walked from j = n-(k+1)/2 down to 1.  The divisor comes from the perturbed
working copy, whose band-edge entries are nonzero by construction.  In the
perturbed lane every entry stays a rational function until the final
assembly, where the perturbation is evaluated at 0; intermediate values
may legitimately have poles there that cancel before assembly.

An anti-banded matrix N is the column reversal of a banded M, so its
inverse is the row reversal of M's inverse.
"""

from __future__ import annotations

from .errors import InternalInconsistencyError, PoleAtZeroError, SingularMatrixError
from .lu import LUFactors, determinant, factorize, lift_to_functions, perturbed_working_copy
from .matrices import AntiPeriodicBandMatrix, DenseMatrix, PeriodicBandMatrix
from .scalars import value_at_zero

__all__ = [
    "lower_inverse_columns",
    "last_columns",
    "remaining_columns",
    "invert",
    "invert_anti",
]


def lower_inverse_columns(factors: LUFactors, wanted) -> dict:
    """Columns of the inverse of unit-lower L.

    Returns ``{r: (t(r+1, r), ..., t(n, r))}`` for each requested column
    r in [1, n-1]; the implicit entries are t(r, r) = 1 and 0 above.
    Computed top-down by

        t(i, r) = -l(i, r) - sum_{j=r+1}^{i-1} l(i, j) * t(j, r)

    with L's sparsity bounding each inner sum.
    """
    n, h = factors.n, factors.h
    lower, lower_last = factors.lower, factors.lower_last
    out = {}
    for r in wanted:
        if not 1 <= r <= n - 1:
            raise ValueError(f"column {r} outside 1..{n - 1}")
        col = [0] * (n + 1)
        for i in range(r + 1, n):
            s = -lower[r - i][r - 1] if i - r <= h else 0
            for j in range(max(r + 1, i - h), i):
                s = s - lower[j - i][j - 1] * col[j]
            col[i] = s
        s = -lower_last[r - 1]
        for j in range(r + 1, n):
            s = s - lower_last[j - 1] * col[j]
        col[n] = s
        out[r] = tuple(col[r + 1:])
    return out


def last_columns(factors: LUFactors, tcols: dict) -> dict:
    """The last (k+1)/2 columns of the inverse, by back-substitution.

    ``tcols`` must contain the L-inverse columns n-(k-1)/2 .. n-1 (column
    n of the L inverse is trivially the last unit vector).  Returns
    ``{r: (S(1, r), ..., S(n, r))}`` for r = n-(k-1)/2 .. n.
    """
    n, h = factors.n, factors.h
    for r in range(n - h, n):
        if r not in tcols:
            raise ValueError(f"missing L-inverse column {r}")
    upper, diag, upper_last = factors.upper, factors.diag, factors.upper_last
    out = {}
    for r in range(n, n - h - 1, -1):
        tcol = tcols.get(r)
        col = [0] * (n + 1)
        for i in range(n, 0, -1):
            if i > r:
                s = tcol[i - r - 1]
            elif i == r:
                s = 1
            else:
                s = 0
            for j in range(i + 1, min(i + h, n - 1) + 1):
                s = s - upper[j - i][i - 1] * col[j]
            if i <= n - 1:
                s = s - upper_last[i - 1] * col[n]
            col[i] = s / diag[i - 1]
        out[r] = tuple(col[1:])
    return out


def remaining_columns(work: PeriodicBandMatrix, cols: dict) -> dict:
    """Complete the inverse going from column n-(k+1)/2 down to column 1.

    ``work`` must be the perturbed working copy the factorization ran on,
    so each divisor a(j, j+h) is nonzero; ``cols`` must already hold
    columns n-(k-1)/2 .. n.  Returns a dict holding all n columns.
    """
    n, h, k = work.n, work.h, work.k
    for r in range(n - h, n + 1):
        if r not in cols:
            raise ValueError(f"missing inverse column {r}")
    out = dict(cols)
    for j in range(n - h - 1, 0, -1):
        target = j + h
        acc = [0] * n
        acc[target - 1] = 1
        for r in range(j + 1, min(j + k - 1, n) + 1):
            a = work.get(r, target)
            if a == 0:
                continue
            prev = out[r]
            acc = [av - a * cv for av, cv in zip(acc, prev)]
        divisor = work.get(j, target)
        if divisor == 0:
            raise InternalInconsistencyError(
                f"zero divisor a({j}, {target}) escaped the edge substitution")
        out[j] = tuple(v / divisor for v in acc)
    return out


def _assemble(cols: dict, n: int) -> DenseMatrix:
    entries = []
    try:
        for i in range(n):
            entries.extend(value_at_zero(cols[r + 1][i]) for r in range(n))
    except PoleAtZeroError as exc:
        raise SingularMatrixError() from exc
    return DenseMatrix(n, n, entries)


def invert(m: PeriodicBandMatrix) -> DenseMatrix:
    """Inverse of a periodic banded matrix as a dense matrix.

    Exact mode raises :class:`SingularMatrixError` on det = 0 and is
    otherwise exact, including on inputs that needed perturbation; float
    mode raises :class:`ZeroPivotError` on degenerate inputs.
    """
    factors = factorize(m)
    if determinant(factors) == 0:
        raise SingularMatrixError()
    n, h = m.n, m.h
    tcols = lower_inverse_columns(factors, range(n - h, n))
    cols = last_columns(factors, tcols)
    if m.mode.is_exact:
        work, _ = perturbed_working_copy(m)
        if factors.perturbed and work is m:
            work = lift_to_functions(m)
    else:
        work = m
    cols = remaining_columns(work, cols)
    return _assemble(cols, n)


def invert_anti(nmat: AntiPeriodicBandMatrix) -> DenseMatrix:
    """Inverse of a periodic anti-banded matrix.

    N equals M R with M banded and R the order reversal; R is involutory,
    so the inverse of N is R times the inverse of M, i.e. the row-reversed
    banded inverse.
    """
    return invert(nmat.column_reversed()).row_reversed()
