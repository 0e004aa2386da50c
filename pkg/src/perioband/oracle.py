"""Independent dense reference implementations used to validate the band
algorithms.

Everything here works on plain dense matrices of exact rationals and
deliberately shares no code with the band modules: the determinant is
Bareiss fraction-free elimination, the inverse is textbook Gauss-Jordan
with partial pivoting by first nonzero row, and the solver is Gaussian
elimination with back substitution.  Correctness and obviousness beat
speed throughout; these run in O(n^3).
"""

from __future__ import annotations

from .errors import DimensionMismatchError, SingularMatrixError
from .matrices import DenseMatrix, ExchangeOperator
from .scalars import Rational

__all__ = ["determinant", "invert", "solve", "exchange_determinant"]


def _square_rows(d: DenseMatrix):
    if d.rows != d.cols:
        raise DimensionMismatchError(f"matrix is {d.rows}x{d.cols}, expected square")
    return [[Rational(1) * v for v in d.row(i)] for i in range(1, d.rows + 1)]


def determinant(d: DenseMatrix):
    """Exact determinant by Bareiss fraction-free elimination.

    Each step computes a(i,j) <- (a(i,j) a(r,r) - a(i,r) a(r,j)) / p with p
    the previous pivot; over an integral domain every division is exact,
    which keeps intermediate growth controlled.  Returns 0 for singular
    input.
    """
    a = _square_rows(d)
    n = len(a)
    sign = 1
    prev = Rational(1)
    for r in range(n - 1):
        p = r
        while p < n and a[p][r] == 0:
            p += 1
        if p == n:
            return Rational(0)
        if p != r:
            a[r], a[p] = a[p], a[r]
            sign = -sign
        arr = a[r]
        for i in range(r + 1, n):
            ai = a[i]
            air = ai[r]
            for j in range(r + 1, n):
                ai[j] = (ai[j] * arr[r] - air * arr[j]) / prev
            ai[r] = Rational(0)
        prev = arr[r]
    return sign * a[n - 1][n - 1]


def invert(d: DenseMatrix) -> DenseMatrix:
    """Exact inverse by Gauss-Jordan elimination on [A | I], partial
    pivoting by first nonzero row.  Raises SingularMatrixError when no
    pivot can be found."""
    a = _square_rows(d)
    n = len(a)
    zero, one = Rational(0), Rational(1)
    inv = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for col in range(n):
        p = col
        while p < n and a[p][col] == 0:
            p += 1
        if p == n:
            raise SingularMatrixError()
        if p != col:
            a[col], a[p] = a[p], a[col]
            inv[col], inv[p] = inv[p], inv[col]
        piv = a[col][col]
        if piv != 1:
            a[col] = [v / piv for v in a[col]]
            inv[col] = [v / piv for v in inv[col]]
        pa, pv = a[col], inv[col]
        for i in range(n):
            if i == col:
                continue
            f = a[i][col]
            if f == 0:
                continue
            a[i] = [x - f * y for x, y in zip(a[i], pa)]
            inv[i] = [x - f * y for x, y in zip(inv[i], pv)]
    return DenseMatrix.from_rows(inv)


def solve(d: DenseMatrix, y):
    """Exact solution of d x = y by Gaussian elimination with back
    substitution.  Raises SingularMatrixError for singular input."""
    a = _square_rows(d)
    n = len(a)
    if len(y) != n:
        raise DimensionMismatchError(f"right-hand side length {len(y)} != {n}")
    b = [Rational(1) * v for v in y]
    for col in range(n):
        p = col
        while p < n and a[p][col] == 0:
            p += 1
        if p == n:
            raise SingularMatrixError()
        if p != col:
            a[col], a[p] = a[p], a[col]
            b[col], b[p] = b[p], b[col]
        pa, pb = a[col], b[col]
        piv = pa[col]
        for i in range(col + 1, n):
            f = a[i][col]
            if f == 0:
                continue
            f = f / piv
            a[i] = [x - f * y_ for x, y_ in zip(a[i], pa)]
            b[i] = b[i] - f * pb
    x = [Rational(0)] * n
    for i in range(n - 1, -1, -1):
        s = b[i]
        ai = a[i]
        for j in range(i + 1, n):
            s = s - ai[j] * x[j]
        x[i] = s / ai[i]
    return x


def exchange_determinant(n: int):
    """Determinant of the order-n reversal permutation, computed by
    materializing it and running the Bareiss determinant."""
    return determinant(ExchangeOperator(n).to_dense())
