"""Worked-example fixtures: the three matrices, the values their source
lists for every intermediate quantity, and the assembled inverse displays.

A handful of published positions are internally inconsistent (a column
list disagreeing with the assembled display, an intermediate value
contradicting the printed solution, a sign flip between two bullets).
Tables suffixed ``_PUBLISHED`` carry the values exactly as printed; the
corresponding unsuffixed tables are the golden fixtures with each such
position replaced by the independently computed reference value.  The
``ERRATA`` registry lists every correction; docs/FIXTURES.md documents
them and ``tests/test_inversion.py::test_fixture_arbitration`` proves the
discrepancy set is exactly the registered one.
"""

from perioband import DenseMatrix, PeriodicBandMatrix
from perioband.scalars import EXACT, Rational


def Q(value):
    return Rational(value)


def rows_to_pbm(rows, k):
    return PeriodicBandMatrix.from_dense(
        DenseMatrix.from_rows([[Q(v) for v in row] for row in rows]), k, EXACT)


def qtuple(*values):
    return tuple(Q(v) for v in values)


def _patched(seq, replacements):
    out = list(seq)
    for idx, value in replacements.items():
        out[idx] = Q(value)
    return tuple(out)


# --- Example 1: n = 6, k = 3 ------------------------------------------------

EX1_ROWS = [
    [2, 1, 0, 0, 0, 1],
    [1, -1, 2, 0, 0, 0],
    [0, 2, -2, 3, 0, 0],
    [0, 0, -1, 1, 1, 0],
    [0, 0, 0, 2, -3, -2],
    [2, 0, 0, 0, 1, 5],
]

EX1_N_ROWS = [
    [1, 0, 0, 0, 1, 2],
    [0, 0, 0, 2, -1, 1],
    [0, 0, 3, -2, 2, 0],
    [0, 1, 1, -1, 0, 0],
    [-2, -3, 2, 0, 0, 0],
    [5, 1, 0, 0, 0, 2],
]

EX1_DET = 153
EX1_UPPER_1 = qtuple(1, 2, 3, 1)                       # u(i, i+1)
EX1_LOWER_1 = qtuple("1/2", "-4/3", "-3/2", "4/11")    # l(i, i-1)
EX1_DIAG = qtuple(2, "-3/2", "2/3", "11/2", "-37/11", "153/37")
EX1_UPPER_LAST = qtuple(1, "-1/2", "-2/3", -1, "-18/11")
EX1_LOWER_LAST = qtuple(1, "2/3", -2, "12/11", "1/37")

# L-inverse columns, entries t(r+1, r) .. t(n, r)
EX1_TCOLS = {
    1: qtuple("-1/2", "-2/3", -1, "4/11", "-34/37"),
    2: qtuple("4/3", 2, "-8/11", "-6/37"),
    3: qtuple("3/2", "-6/11", "14/37"),
    4: qtuple("-4/11", "-40/37"),
    5: qtuple("-1/37"),
}

# Inverse columns as listed, bottom-to-top: S(n, r), S(n-1, r), ..., S(1, r)
EX1_COLUMNS = {
    6: qtuple("37/153", "-2/17", "10/153", "-8/153", "-23/153", "-7/153"),
    5: qtuple("-1/153", "-5/17", "8/153", "-37/153", "-49/153", "25/153"),
    4: qtuple("-40/153", "4/17", "14/153", "-103/153", "-124/153", "82/153"),
    3: qtuple("14/153", "2/17", "41/153", "59/153", "74/153", "-44/153"),
    2: qtuple("-2/51", "4/17", "16/51", "28/51", "4/51", "-1/51"),
    1: qtuple("-2/9", 0, "-2/9", "-2/9", "1/9", "5/9"),
}

# Assembled inverse display, rows top to bottom, as published; the golden
# variant corrects position (1, 3) to the reference value.
EX1_INVERSE_DISPLAY_PUBLISHED = [
    qtuple("5/9", "-1/51", "-144/153", "82/153", "25/153", "-7/153"),
    qtuple("1/9", "4/51", "74/153", "-124/153", "-49/153", "-23/153"),
    qtuple("-2/9", "28/51", "59/153", "-103/153", "-37/153", "-8/153"),
    qtuple("-2/9", "16/51", "41/153", "14/153", "8/153", "10/153"),
    qtuple(0, "4/17", "2/17", "4/17", "-5/17", "-2/17"),
    qtuple("-2/9", "-2/51", "14/153", "-40/153", "-1/153", "37/153"),
]
EX1_INVERSE_DISPLAY = [_patched(EX1_INVERSE_DISPLAY_PUBLISHED[0], {2: "-44/153"})
                       ] + EX1_INVERSE_DISPLAY_PUBLISHED[1:]

# Mirrored-inverse display (inverse of the anti-banded matrix); published
# position (6, 3) repeats the same wrong value, reduced.
EX1_ANTI_INVERSE_DISPLAY_PUBLISHED = [
    qtuple("-2/9", "-2/51", "14/153", "-40/153", "-1/153", "37/153"),
    qtuple(0, "4/17", "2/17", "4/17", "-5/17", "-2/17"),
    qtuple("-2/9", "16/51", "41/153", "14/153", "8/153", "10/153"),
    qtuple("-2/9", "28/51", "59/153", "-103/153", "-37/153", "-8/153"),
    qtuple("1/9", "4/51", "74/153", "-124/153", "-49/153", "-23/153"),
    qtuple("5/9", "-1/51", "-16/17", "82/153", "25/153", "-7/153"),
]
EX1_ANTI_INVERSE_DISPLAY = EX1_ANTI_INVERSE_DISPLAY_PUBLISHED[:5] + [
    _patched(EX1_ANTI_INVERSE_DISPLAY_PUBLISHED[5], {2: "-44/153"})]


# --- Example 2: n = 10, k = 9 -----------------------------------------------

EX2_ROWS = [
    [1, -1, 2, 2, -1, 0, 0, 0, 0, 1],
    [2, -1, 3, 1, 1, 2, 0, 0, 0, 0],
    [1, -1, 1, 2, 1, -2, -1, 0, 0, 0],
    [-3, 1, -1, 1, -3, 1, 1, -3, 0, 0],
    [2, -1, 1, 0, -3, 2, 1, -1, -1, 0],
    [0, 1, 2, 0, -1, 0, -2, 1, 0, 1],
    [0, 0, -2, 0, 1, -1, 1, -2, 1, -1],
    [0, 0, 0, 1, 3, 2, -1, 1, 2, 1],
    [0, 0, 0, 0, -1, 0, 2, 1, -2, 1],
    [2, 0, 0, 0, 0, 2, 1, 1, -1, 2],
]

EX2_DET = 1888
# u(7, 8) is printed with a flipped sign; reconstructing L U = M fixes +53/29.
EX2_UPPER_PUBLISHED = {
    1: qtuple(-1, -1, 0, 6, 3, -7, "-53/29", "175/54"),
    2: qtuple(2, -3, 2, -1, 1, 42, "121/58"),
    3: qtuple(2, 3, -2, -2, -4, 8),
    4: qtuple(-1, 2, -1, -3, -1),
}
EX2_UPPER = dict(EX2_UPPER_PUBLISHED)
EX2_UPPER[1] = _patched(EX2_UPPER_PUBLISHED[1], {6: "53/29"})
# l(9, 8) is printed as -27/205; the source's own t(9, 8) = 27/215 = -l(9, 8)
# fixes -27/215.
EX2_LOWER_PUBLISHED = {
    -1: qtuple(2, 0, -3, -1, 8, "3/58", "-2/27", "-27/205"),
    -2: qtuple(1, -2, 2, 3, "3/2", "3/58", 1),
    -3: qtuple(-3, 1, -3, 0, "3/2", "3/58"),
    -4: qtuple(2, 1, 2, 1, "1/2"),
}
EX2_LOWER = dict(EX2_LOWER_PUBLISHED)
EX2_LOWER[-1] = _patched(EX2_LOWER_PUBLISHED[-1], {7: "-27/215"})
EX2_DIAG = qtuple(1, 1, -1, 1, -2, -29, "54/29", "215/27", "-309/86", "944/1545")
EX2_UPPER_LAST = qtuple(1, -2, -1, -4, -2, 28, "74/29", "182/27", "-248/215")
EX2_LOWER_LAST = qtuple(2, 2, 2, 2, 10, "26/29", "95/54", "331/430", "373/309")

# t(10, 2) is printed 23/209 (digit slip for 23/309) and t(10, 6) with a
# flipped sign; both recompute from the published L entries.
EX2_TCOLS_PUBLISHED = {
    1: qtuple(-2, -1, -4, -2, 27, "209/58", "317/54", "-1403/430", "2699/3090"),
    2: qtuple(0, 2, 1, -15, "-21/29", "-25/9", "28/43", "23/209"),
    3: qtuple(3, 1, -14, "-161/58", "-215/54", "5/2", "-160/309"),
    4: qtuple(1, -11, "-27/29", -2, "161/215", "419/3090"),
    5: qtuple(-8, "-63/58", "-7/6", "367/430", "-3241/3090"),
    6: qtuple("-3/58", "-1/18", "-3/430", "777/1030"),
    7: qtuple("2/27", "-213/215", "-639/1030"),
    8: qtuple("27/215", "-949/1030"),
    9: qtuple("-373/309"),
}
EX2_TCOLS = dict(EX2_TCOLS_PUBLISHED)
EX2_TCOLS[2] = _patched(EX2_TCOLS_PUBLISHED[2], {7: "23/309"})
EX2_TCOLS[6] = _patched(EX2_TCOLS_PUBLISHED[6], {3: "-777/1030"})

# Inverse columns as listed, bottom-to-top: S(10, r) .. S(1, r).  C8 carries
# S(4, 8) = 337/286 (assembled display and reference say 337/236), C5 carries
# S(5, 5) = -1215/1885 (display and reference say -1215/1888), and C3 carries
# S(5, 3) = 5/59 (display and reference say -5/59).
EX2_COLUMNS_PUBLISHED = {
    10: qtuple("1545/944", "-31/59", "-553/472", "-119/236", "-33/236",
               "479/944", "-137/118", "153/944", "-609/472", "-199/472"),
    9: qtuple("-1865/944", "21/59", "721/472", "191/236", "49/236",
              "-511/944", "207/118", "-313/944", "1033/472", "367/472"),
    8: qtuple("-2847/1888", "53/118", "1151/944", "173/472", "163/472",
              "-857/1888", "337/286", "-863/1888", "1399/944", "561/944"),
    7: qtuple("-1917/1888", "71/118", "589/944", "303/472", "-31/472",
              "-587/1888", "211/236", "-221/1888", "1509/944", "707/944"),
    6: qtuple("-2331/1888", "47/118", "827/944", "169/472", "31/472",
              "-829/1888", "261/236", "-251/1888", "1795/944", "709/944"),
    5: qtuple("-3241/1888", "37/118", "1113/944", "123/472", "165/472",
              "-1215/1885", "331/236", "-1001/1888", "1393/944", "759/944"),
    4: qtuple("419/1888", "-33/118", "-307/944", "-81/472", "41/472",
              "213/1888", "-5/236", "3/1888", "-123/944", "-189/944"),
    3: qtuple("-50/59", "-25/59", "23/59", "-14/59", "10/59", "5/59",
              "58/59", "-25/59", "44/59", "23/59"),
    2: qtuple("115/944", "-13/59", "-171/472", "11/236", "9/236", "277/944",
              "-27/118", "323/944", "-27/472", "-53/472"),
    1: qtuple("2699/1888", "53/118", "-619/944", "55/472", "-191/472",
              "205/1888", "-253/236", "907/1888", "-1315/944", "-501/944"),
}
EX2_COLUMNS = dict(EX2_COLUMNS_PUBLISHED)
EX2_COLUMNS[8] = _patched(EX2_COLUMNS_PUBLISHED[8], {6: "337/236"})
EX2_COLUMNS[5] = _patched(EX2_COLUMNS_PUBLISHED[5], {5: "-1215/1888"})
EX2_COLUMNS[3] = _patched(EX2_COLUMNS_PUBLISHED[3], {5: "-5/59"})

EX2_INVERSE_DISPLAY_PUBLISHED = [
    qtuple("-501/944", "53/472", "23/59", "-189/944", "759/944", "709/944",
           "707/944", "561/944", "367/472", "-199/472"),
    qtuple("-1315/944", "-27/472", "44/59", "-123/944", "1393/944",
           "1795/944", "1509/944", "1399/944", "1033/472", "-609/472"),
    qtuple("907/1888", "323/944", "-25/59", "3/1888", "-1001/1888",
           "-251/1888", "-221/1888", "-863/1888", "-313/944", "153/944"),
    qtuple("-253/236", "-27/118", "58/59", "-5/236", "331/236", "261/236",
           "211/236", "337/236", "207/118", "-237/118"),
    qtuple("205/118", "277/944", "-5/59", "213/1888", "-1215/1888",
           "-829/1888", "-587/1888", "-857/1888", "-511/944", "479/944"),
    qtuple("-191/472", "9/236", "10/59", "41/472", "165/472", "31/472",
           "-31/472", "163/472", "49/236", "-33/236"),
    qtuple("55/472", "11/236", "-14/59", "-81/472", "123/472", "169/472",
           "303/472", "173/472", "191/236", "-119/236"),
    qtuple("-619/944", "-171/472", "23/59", "-307/944", "1113/944",
           "827/944", "589/944", "1151/944", "721/472", "-553/472"),
    qtuple("53/118", "-13/59", "-25/59", "-33/118", "37/118", "47/118",
           "71/118", "53/118", "21/59", "-31/59"),
    qtuple("2699/1888", "115/944", "-50/59", "419/1888", "-3241/1888",
           "-2331/1888", "-1917/1888", "-2847/1888", "-1865/944", "1545/944"),
]
# Display corrections: (1, 2) sign flip vs column list C2, (4, 10) digit slip
# vs C10, (5, 1) denominator slip vs C1.
EX2_INVERSE_DISPLAY = [
    _patched(EX2_INVERSE_DISPLAY_PUBLISHED[0], {1: "-53/472"}),
    EX2_INVERSE_DISPLAY_PUBLISHED[1],
    EX2_INVERSE_DISPLAY_PUBLISHED[2],
    _patched(EX2_INVERSE_DISPLAY_PUBLISHED[3], {9: "-137/118"}),
    _patched(EX2_INVERSE_DISPLAY_PUBLISHED[4], {0: "205/1888"}),
] + EX2_INVERSE_DISPLAY_PUBLISHED[5:]

# The mirrored-inverse display repeats the assembled display's rows in
# reverse order, typos included, so it contributes no new positions.
EX2_ANTI_INVERSE_DISPLAY = list(reversed(EX2_INVERSE_DISPLAY))

# Registry of every published-vs-reference discrepancy asserted by
# test_fixture_arbitration: (description, published literal, golden literal).
ERRATA = [
    ("ex1 assembled inverse (1,3)", "-144/153", "-44/153"),
    ("ex1 mirrored inverse (6,3)", "-16/17", "-44/153"),
    ("ex2 u(7,8)", "-53/29", "53/29"),
    ("ex2 l(9,8)", "-27/205", "-27/215"),
    ("ex2 t(10,2)", "23/209", "23/309"),
    ("ex2 t(10,6)", "777/1030", "-777/1030"),
    ("ex2 column list S(4,8)", "337/286", "337/236"),
    ("ex2 column list S(5,5)", "-1215/1885", "-1215/1888"),
    ("ex2 column list S(5,3)", "5/59", "-5/59"),
    ("ex2 assembled inverse (1,2)", "53/472", "-53/472"),
    ("ex2 assembled inverse (4,10)", "-237/118", "-137/118"),
    ("ex2 assembled inverse (5,1)", "205/118", "205/1888"),
    ("ex3 z(6)", "-4/3", "-14/3"),
]


# --- Example 3: n = 6, k = 5, solve fixture ---------------------------------

EX3_ROWS = [
    [1, 2, -1, 0, 0, 1],
    [2, -1, -3, 1, 0, 0],
    [1, 1, -1, 1, 2, 0],
    [0, 2, 1, 1, -1, -2],
    [0, 0, -1, -2, 1, 3],
    [1, 0, 0, 1, 1, 1],
]

EX3_RHS = qtuple(3, -1, 4, 1, 1, 4)
EX3_DET = 14
EX3_UPPER = {1: qtuple(2, -1, "4/5", -7), 2: qtuple(-1, 1, 2)}
EX3_LOWER = {-1: qtuple(2, "1/5", 3, -2), -2: qtuple(1, "-2/5", -5)}
EX3_DIAG = qtuple(1, -5, "1/5", -1, -3, "-14/3")
EX3_UPPER_LAST = qtuple(1, -2, "-3/5", -1, -2)
EX3_LOWER_LAST = qtuple(1, "2/5", 7, 5, "-22/3")
EX3_X = qtuple(1, 1, 1, 1, 1, 1)
# The published z6 = -4/3 contradicts the published x6 = 1 together with
# u(6,6) = -14/3; forward substitution gives -14/3 (docs/FIXTURES.md).
EX3_Z_PUBLISHED = qtuple(3, -7, "12/5", -9, -5, "-4/3")
EX3_Z = _patched(EX3_Z_PUBLISHED, {5: "-14/3"})


def ex1_matrix():
    return rows_to_pbm(EX1_ROWS, 3)


def ex1_anti_matrix():
    return ex1_matrix().column_reversed()


def ex2_matrix():
    return rows_to_pbm(EX2_ROWS, 9)


def ex3_matrix():
    return rows_to_pbm(EX3_ROWS, 5)
