"""Line-oriented text formats for matrices and vectors.

All four formats are UTF-8, bit-exact under parse/write round trips, and
allow comment lines starting with ``#`` (skipped on input, never emitted
by the writers).

Banded matrix (header ``PKB 1``) and anti-banded matrix (``APKB 1``)::

    PKB 1
    n <n> k <k> mode <exact|float>
    corner_1n <value>
    corner_n1 <value>
    diag <offset> <v1> ... <v_{n-|offset|}>     # k lines, offsets ascending

For ``APKB`` the same body is read along anti-diagonals: ``diag <d>``
lists the entries at positions (i, n+1-i-d) in ascending i, and the two
corner lines hold the (1, 1) and (n, n) entries (the field names are kept
so the body layout is identical to ``PKB``).

Dense matrix::

    DENSE 1
    n <rows> <cols>
    <row of space-separated values>             # rows lines

Vector::

    VEC 1
    n <n>
    <n whitespace-separated values>

Values are rational literals in exact mode (``-37/11``, ``153``) and
decimal/scientific float literals in float mode; the writers emit the
shortest round-tripping form.
"""

from __future__ import annotations

from .errors import FormatError
from .matrices import AntiPeriodicBandMatrix, DenseMatrix, PeriodicBandMatrix
from .scalars import EXACT, FLOAT, ScalarMode, format_value, rational

__all__ = [
    "parse_banded",
    "write_banded",
    "parse_dense",
    "write_dense",
    "parse_vector",
    "write_vector",
    "parse_matrix_file",
]


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield no, line


def _parse_value(token: str, mode: ScalarMode, no: int):
    try:
        if mode.is_exact:
            return rational(token)
        return float(token)
    except ValueError as exc:
        raise FormatError(f"line {no}: bad value {token!r}") from exc


def _expect(cond: bool, no: int, message: str):
    if not cond:
        raise FormatError(f"line {no}: {message}")


def parse_banded(text: str):
    """Parse PKB/APKB text into a banded or anti-banded matrix."""
    lines = _lines(text)
    try:
        no, header = next(lines)
    except StopIteration:
        raise FormatError("empty file") from None
    _expect(header in ("PKB 1", "APKB 1"), no, f"bad header {header!r}")
    anti = header.startswith("APKB")

    no, line = _next(lines, "order line")
    parts = line.split()
    _expect(len(parts) == 6 and parts[0] == "n" and parts[2] == "k"
            and parts[4] == "mode", no, f"bad order line {line!r}")
    try:
        n, k = int(parts[1]), int(parts[3])
    except ValueError:
        raise FormatError(f"line {no}: n and k must be integers") from None
    _expect(parts[5] in ("exact", "float"), no, f"bad mode {parts[5]!r}")
    mode = EXACT if parts[5] == "exact" else FLOAT

    corners = []
    for name in ("corner_1n", "corner_n1"):
        no, line = _next(lines, f"{name} line")
        parts = line.split()
        _expect(len(parts) == 2 and parts[0] == name, no,
                f"expected {name} line, got {line!r}")
        corners.append(_parse_value(parts[1], mode, no))

    h = (k - 1) // 2
    diagonals = {}
    for d in range(-h, h + 1):
        no, line = _next(lines, f"diag {d} line")
        parts = line.split()
        _expect(len(parts) >= 2 and parts[0] == "diag", no,
                f"expected diag line, got {line!r}")
        try:
            offset = int(parts[1])
        except ValueError:
            raise FormatError(f"line {no}: bad offset {parts[1]!r}") from None
        _expect(offset == d, no, f"expected offset {d}, got {offset}")
        values = [_parse_value(t, mode, no) for t in parts[2:]]
        _expect(len(values) == n - abs(d), no,
                f"diag {d}: {len(values)} values, expected {n - abs(d)}")
        diagonals[d] = values

    for no, line in lines:
        raise FormatError(f"line {no}: unexpected trailing content {line!r}")

    cls = AntiPeriodicBandMatrix if anti else PeriodicBandMatrix
    try:
        return cls(n, k, diagonals, corners[0], corners[1], mode)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def _next(lines, what: str):
    try:
        return next(lines)
    except StopIteration:
        raise FormatError(f"unexpected end of file, expected {what}") from None


def write_banded(m) -> str:
    """Canonical PKB/APKB text for a banded or anti-banded matrix."""
    anti = isinstance(m, AntiPeriodicBandMatrix)
    first = m.corner_11 if anti else m.corner_1n
    last = m.corner_nn if anti else m.corner_n1
    out = [
        "APKB 1" if anti else "PKB 1",
        f"n {m.n} k {m.k} mode {m.mode.kind}",
        f"corner_1n {format_value(first)}",
        f"corner_n1 {format_value(last)}",
    ]
    for d in range(-m.h, m.h + 1):
        values = " ".join(format_value(v) for v in m.diagonals[d])
        out.append(f"diag {d} {values}")
    return "\n".join(out) + "\n"


def parse_dense(text: str, mode: ScalarMode = EXACT) -> DenseMatrix:
    lines = _lines(text)
    no, header = _next(lines, "header")
    _expect(header == "DENSE 1", no, f"bad header {header!r}")
    no, line = _next(lines, "shape line")
    parts = line.split()
    _expect(len(parts) == 3 and parts[0] == "n", no, f"bad shape line {line!r}")
    try:
        rows, cols = int(parts[1]), int(parts[2])
    except ValueError:
        raise FormatError(f"line {no}: bad shape {line!r}") from None
    data = []
    for _ in range(rows):
        no, line = _next(lines, "matrix row")
        values = [_parse_value(t, mode, no) for t in line.split()]
        _expect(len(values) == cols, no,
                f"{len(values)} values in row, expected {cols}")
        data.append(values)
    for no, line in lines:
        raise FormatError(f"line {no}: unexpected trailing content {line!r}")
    return DenseMatrix.from_rows(data)


def write_dense(d: DenseMatrix) -> str:
    out = ["DENSE 1", f"n {d.rows} {d.cols}"]
    for i in range(1, d.rows + 1):
        out.append(" ".join(format_value(v) for v in d.row(i)))
    return "\n".join(out) + "\n"


def parse_vector(text: str, mode: ScalarMode = EXACT) -> list:
    lines = _lines(text)
    no, header = _next(lines, "header")
    _expect(header == "VEC 1", no, f"bad header {header!r}")
    no, line = _next(lines, "length line")
    parts = line.split()
    _expect(len(parts) == 2 and parts[0] == "n", no, f"bad length line {line!r}")
    try:
        n = int(parts[1])
    except ValueError:
        raise FormatError(f"line {no}: bad length {line!r}") from None
    values = []
    last_no = no
    for no, line in lines:
        values.extend(_parse_value(t, mode, no) for t in line.split())
        last_no = no
    if len(values) != n:
        raise FormatError(f"line {last_no}: {len(values)} values, expected {n}")
    return values


def write_vector(values) -> str:
    out = ["VEC 1", f"n {len(values)}"]
    out.extend(format_value(v) for v in values)
    return "\n".join(out) + "\n"


def parse_matrix_file(text: str):
    """Parse a file that may be PKB, APKB, or DENSE, deciding by header."""
    for _, line in _lines(text):
        if line.startswith("DENSE"):
            return parse_dense(text)
        return parse_banded(text)
    raise FormatError("empty file")
