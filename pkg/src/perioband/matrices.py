"""Matrix types: periodic banded, periodic anti-banded, dense, and the
column/row reversal operator connecting the first two.

A periodic banded matrix of order ``n`` and odd bandwidth ``k`` is nonzero
only within ``|i - j| <= h`` for ``h = (k - 1) // 2``, plus the two
wrap-around corner entries at (1, n) and (n, 1).  Its anti-banded mirror is
the column-reversed image: nonzero within ``|i + j - (n + 1)| <= h`` plus
corners (1, 1) and (n, n).  All indexing in the public API is 1-based.

Storage is one sequence per diagonal offset plus the two corner scalars,
which makes the zero pattern directly checkable.  Matrices are immutable
once constructed and are validated on construction.
"""

from __future__ import annotations

from .errors import (
    DimensionMismatchError,
    InvalidBandwidthError,
    LengthMismatchError,
    PatternViolationError,
)
from .scalars import EXACT, Rational, RationalFunction, ScalarMode

__all__ = [
    "PeriodicBandMatrix",
    "AntiPeriodicBandMatrix",
    "DenseMatrix",
    "ExchangeOperator",
]


def _check_shape(n: int, k: int):
    if k % 2 == 0 or k < 3:
        raise InvalidBandwidthError(f"bandwidth k={k} must be odd and >= 3")
    if n < k + 1:
        raise InvalidBandwidthError(f"order n={n} must be at least k+1={k + 1}")


def _coerce_entry(v, mode: ScalarMode):
    if mode.is_exact:
        if isinstance(v, float):
            raise TypeError(f"float entry {v!r} in exact mode")
        if isinstance(v, (int,)):
            return Rational(v)
        return v
    if isinstance(v, RationalFunction):
        raise TypeError("rational-function entry in float mode")
    return float(v)


def _coerce_diagonals(n, k, diagonals, mode):
    h = (k - 1) // 2
    out = {}
    for d in range(-h, h + 1):
        if d not in diagonals:
            raise LengthMismatchError(f"missing diagonal at offset {d}")
        seq = tuple(_coerce_entry(v, mode) for v in diagonals[d])
        if len(seq) != n - abs(d):
            raise LengthMismatchError(
                f"diagonal {d} has {len(seq)} entries, expected {n - abs(d)}")
        out[d] = seq
    extra = set(diagonals) - set(out)
    if extra:
        raise LengthMismatchError(f"unexpected diagonal offsets {sorted(extra)}")
    return out


class _BandedBase:
    """Shared storage and validation for the banded and anti-banded types."""

    __slots__ = ("n", "k", "h", "diagonals", "_c_first", "_c_last", "mode")

    def __init__(self, n, k, diagonals, corner_first, corner_last,
                 mode: ScalarMode = EXACT):
        _check_shape(n, k)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "h", (k - 1) // 2)
        object.__setattr__(self, "diagonals", _coerce_diagonals(n, k, diagonals, mode))
        object.__setattr__(self, "_c_first", _coerce_entry(corner_first, mode))
        object.__setattr__(self, "_c_last", _coerce_entry(corner_last, mode))
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def _zero(self):
        return 0.0 if not self.mode.is_exact else Rational(0)

    def _check_index(self, i, j):
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"index ({i}, {j}) outside 1..{self.n}")

    def band_get(self, i: int, d: int):
        """Entry at band offset ``d`` in row ``i``; caller guarantees range."""
        seq = self.diagonals[d]
        return seq[i - 1] if d >= 0 else seq[i + d - 1]

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (self.n == other.n and self.k == other.k
                and self.mode == other.mode
                and self.diagonals == other.diagonals
                and self._c_first == other._c_first
                and self._c_last == other._c_last)

    def to_dense(self) -> "DenseMatrix":
        n = self.n
        return DenseMatrix.from_rows(
            [[self.get(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)])

    def as_float_mode(self):
        """Same matrix demoted to float arithmetic (exact matrices only)."""
        from .scalars import FLOAT

        return type(self)(
            self.n, self.k,
            {d: [float(v) for v in seq] for d, seq in self.diagonals.items()},
            float(self._c_first), float(self._c_last), FLOAT)


class PeriodicBandMatrix(_BandedBase):
    """Banded matrix with wrap-around corners at (1, n) and (n, 1).

    ``diagonals[d]`` holds the entries a(i, i+d) in ascending i for each
    offset d in [-h, h]; ``corner_1n`` and ``corner_n1`` hold the corners.
    """

    def __init__(self, n, k, diagonals, corner_1n, corner_n1,
                 mode: ScalarMode = EXACT):
        super().__init__(n, k, diagonals, corner_1n, corner_n1, mode)

    @property
    def corner_1n(self):
        return self._c_first

    @property
    def corner_n1(self):
        return self._c_last

    def get(self, i: int, j: int):
        """Entry a(i, j), 1-based; zero outside the band and corners."""
        self._check_index(i, j)
        d = j - i
        if -self.h <= d <= self.h:
            return self.band_get(i, d)
        if i == 1 and j == self.n:
            return self._c_first
        if i == self.n and j == 1:
            return self._c_last
        return self._zero()

    def __getitem__(self, ij):
        return self.get(*ij)

    @classmethod
    def from_dense(cls, dense: "DenseMatrix", k: int,
                   mode: ScalarMode = EXACT) -> "PeriodicBandMatrix":
        """Extract band and corners from a square dense matrix.

        Raises PatternViolationError at the first nonzero entry outside
        the banded-plus-corners pattern.
        """
        if dense.rows != dense.cols:
            raise DimensionMismatchError(
                f"matrix is {dense.rows}x{dense.cols}, expected square")
        n = dense.rows
        _check_shape(n, k)
        h = (k - 1) // 2
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if abs(i - j) <= h or (i, j) in ((1, n), (n, 1)):
                    continue
                if dense.get(i, j) != 0:
                    raise PatternViolationError(i, j)
        diagonals = {
            d: [dense.get(i, i + d)
                for i in range(max(1, 1 - d), min(n, n - d) + 1)]
            for d in range(-h, h + 1)
        }
        return cls(n, k, diagonals, dense.get(1, n), dense.get(n, 1), mode)

    def column_reversed(self) -> "AntiPeriodicBandMatrix":
        """The anti-banded image with entry (i, j) equal to this matrix's
        entry (i, n+1-j); exact inverse of
        :meth:`AntiPeriodicBandMatrix.column_reversed`."""
        return AntiPeriodicBandMatrix(self.n, self.k, self.diagonals,
                                      self._c_first, self._c_last, self.mode)

    def matvec(self, x):
        """Product M @ x using the band structure, O(n k)."""
        n, h = self.n, self.h
        if len(x) != n:
            raise DimensionMismatchError(f"vector length {len(x)} != {n}")
        out = []
        for i in range(1, n + 1):
            s = self._zero()
            for d in range(max(1 - i, -h), min(n - i, h) + 1):
                s = s + self.band_get(i, d) * x[i + d - 1]
            if i == 1:
                s = s + self._c_first * x[n - 1]
            elif i == n:
                s = s + self._c_last * x[0]
            out.append(s)
        return out

    def scaled(self, factor) -> "PeriodicBandMatrix":
        """New matrix with every entry multiplied by ``factor``."""
        return PeriodicBandMatrix(
            self.n, self.k,
            {d: [v * factor for v in seq] for d, seq in self.diagonals.items()},
            self._c_first * factor, self._c_last * factor, self.mode)

    def __repr__(self):
        return (f"PeriodicBandMatrix(n={self.n}, k={self.k}, "
                f"mode={self.mode.kind!r})")


class AntiPeriodicBandMatrix(_BandedBase):
    """Anti-banded matrix: nonzero within ``|i + j - (n + 1)| <= h`` plus
    corners (1, 1) and (n, n).

    ``diagonals[d]`` holds the anti-diagonal entries a(i, n+1-i-d) in
    ascending i, which makes this the column-reversed view of a
    :class:`PeriodicBandMatrix` sharing the same storage.
    """

    def __init__(self, n, k, diagonals, corner_11, corner_nn,
                 mode: ScalarMode = EXACT):
        super().__init__(n, k, diagonals, corner_11, corner_nn, mode)

    @property
    def corner_11(self):
        return self._c_first

    @property
    def corner_nn(self):
        return self._c_last

    def get(self, i: int, j: int):
        """Entry a(i, j), 1-based; zero outside the anti-band and corners."""
        self._check_index(i, j)
        d = (self.n + 1 - j) - i
        if -self.h <= d <= self.h:
            return self.band_get(i, d)
        if i == 1 and j == 1:
            return self._c_first
        if i == self.n and j == self.n:
            return self._c_last
        return self._zero()

    def __getitem__(self, ij):
        return self.get(*ij)

    def column_reversed(self) -> "PeriodicBandMatrix":
        """The banded image with entry (i, j) equal to this matrix's entry
        (i, n+1-j)."""
        return PeriodicBandMatrix(self.n, self.k, self.diagonals,
                                  self._c_first, self._c_last, self.mode)

    def __repr__(self):
        return (f"AntiPeriodicBandMatrix(n={self.n}, k={self.k}, "
                f"mode={self.mode.kind!r})")


class DenseMatrix:
    """Row-major dense matrix of scalars; 1-based access like the band types."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise LengthMismatchError(
                f"{len(entries)} entries for a {rows}x{cols} matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("DenseMatrix is immutable")

    @classmethod
    def from_rows(cls, rows) -> "DenseMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise LengthMismatchError("ragged rows")
        return cls(len(rows), ncols, [v for r in rows for v in r])

    @classmethod
    def identity(cls, n: int) -> "DenseMatrix":
        one, zero = Rational(1), Rational(0)
        return cls(n, n, [one if i == j else zero
                          for i in range(n) for j in range(n)])

    def get(self, i: int, j: int):
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise IndexError(f"index ({i}, {j}) outside {self.rows}x{self.cols}")
        return self.entries[(i - 1) * self.cols + (j - 1)]

    def __getitem__(self, ij):
        return self.get(*ij)

    def row(self, i: int):
        base = (i - 1) * self.cols
        return self.entries[base:base + self.cols]

    def to_lists(self):
        return [list(self.row(i)) for i in range(1, self.rows + 1)]

    def row_reversed(self) -> "DenseMatrix":
        """Rows in reverse order: row i of the result is row n+1-i."""
        out = []
        for i in range(self.rows, 0, -1):
            out.extend(self.row(i))
        return DenseMatrix(self.rows, self.cols, out)

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by "
                f"{other.rows}x{other.cols}")
        n, m, p = self.rows, self.cols, other.cols
        zero = 0.0 if isinstance(self.entries[0], float) else Rational(0)
        orows = [other.row(i + 1) for i in range(m)]
        out = []
        for i in range(1, n + 1):
            acc = [zero] * p
            for jj, f in enumerate(self.row(i)):
                if f == 0:
                    continue
                orow = orows[jj]
                acc = [a + f * b for a, b in zip(acc, orow)]
            out.extend(acc)
        return DenseMatrix(n, p, out)

    def matvec(self, x):
        if len(x) != self.cols:
            raise DimensionMismatchError(f"vector length {len(x)} != {self.cols}")
        zero = 0.0 if isinstance(self.entries[0], float) else Rational(0)
        out = []
        for i in range(1, self.rows + 1):
            s = zero
            for a, b in zip(self.row(i), x):
                s = s + a * b
            out.append(s)
        return out

    def __repr__(self):
        return f"DenseMatrix({self.rows}x{self.cols})"


class ExchangeOperator:
    """The order-reversal permutation.  Never materialized by the band
    algorithms (applying it is a relabeling); :meth:`to_dense` exists for
    the independent reference computations that want the actual matrix.
    Applying it twice is the identity.
    """

    __slots__ = ("n",)

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("order must be positive")
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("ExchangeOperator is immutable")

    def to_dense(self) -> DenseMatrix:
        one, zero = Rational(1), Rational(0)
        n = self.n
        return DenseMatrix(n, n, [one if i + j == n - 1 else zero
                                  for i in range(n) for j in range(n)])

    def apply_rows(self, dense: DenseMatrix) -> DenseMatrix:
        if dense.rows != self.n:
            raise DimensionMismatchError("row count mismatch")
        return dense.row_reversed()
