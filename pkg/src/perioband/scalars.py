"""Exact scalar arithmetic: rationals and rational functions of a vanishing
perturbation symbol.

Exact values are arbitrary-precision rationals (gmpy2's ``mpq`` when
available, ``fractions.Fraction`` otherwise; both are canonical: positive
denominator, reduced to lowest terms, zero stored as 0/1).

When a zero band-edge entry or zero pivot would otherwise stop the
factorization, the entry is replaced by a symbolic perturbation ``eps``.
All downstream arithmetic then happens in the field of rational functions
of ``eps`` over the rationals (:class:`RationalFunction`), and ``eps`` is
substituted by 0 only at the very end, after every cancellation has been
carried out exactly.  This module supplies that field: :class:`Polynomial`
(dense univariate, rational coefficients) and :class:`RationalFunction`
(canonical quotient: numerator and denominator coprime, denominator monic).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "Rational",
    "rational",
    "format_value",
    "value_at_zero",
    "ScalarMode",
    "EXACT",
    "FLOAT",
    "Polynomial",
    "RationalFunction",
    "SYMBOL",
]

try:
    from gmpy2 import mpq as Rational

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Rational

    HAVE_GMPY2 = False

#: Rendering of the perturbation symbol in textual output.
SYMBOL = "eps"

_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?\Z")

_Q0 = Rational(0)
_Q1 = Rational(1)


def rational(text: str):
    """Parse a rational literal: optional sign, integer, optional ``/`` and
    positive integer (``-37/11``, ``153``, ``0``).

    Raises ValueError for anything else, including zero denominators.
    """
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in text and text.split("/", 1)[1] == "0":
        raise ValueError(f"zero denominator: {text!r}")
    return Rational(text.lstrip("+"))


def format_value(v) -> str:
    """Canonical text for a scalar: ``num/den`` or ``num`` for rationals,
    shortest round-tripping decimal for floats."""
    if isinstance(v, float):
        return repr(v)
    return str(v)


@dataclass(frozen=True)
class ScalarMode:
    """Arithmetic mode a matrix carries.

    ``exact`` computes with arbitrary-precision rationals and switches to
    rational functions of the perturbation symbol when zeros demand it.
    ``float`` computes with IEEE doubles and refuses (raises) instead of
    perturbing; ``zero_tolerance`` is relative to the largest absolute
    value in the affected matrix row.
    """

    kind: str
    zero_tolerance: float = 1e-12

    def __post_init__(self):
        if self.kind not in ("exact", "float"):
            raise ValueError(f"unknown mode {self.kind!r}")
        if self.zero_tolerance < 0:
            raise ValueError("zero_tolerance must be nonnegative")

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"


EXACT = ScalarMode("exact", 0.0)
FLOAT = ScalarMode("float")


def _as_rational(v):
    if isinstance(v, int):
        return Rational(v)
    return v


class Polynomial:
    """Dense univariate polynomial over exact rationals.

    Coefficients are stored lowest power first; the highest stored
    coefficient is nonzero, and the zero polynomial is the empty tuple.
    Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [_as_rational(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, value) -> "Polynomial":
        return cls((value,))

    @classmethod
    def symbol(cls) -> "Polynomial":
        """The polynomial consisting of the bare perturbation symbol."""
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [_Q0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Polynomial(out)

    def scale(self, factor) -> "Polynomial":
        factor = _as_rational(factor)
        if factor == 0:
            return Polynomial()
        return Polynomial([c * factor for c in self.coeffs])

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return self.scale(_Q1 / lead)

    def divmod(self, divisor: "Polynomial"):
        """Quotient and remainder of exact division over the rationals."""
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dcs = divisor.coeffs
        dd = len(dcs) - 1
        lead = dcs[-1]
        if len(rem) <= dd:
            return Polynomial(), self
        quot = [_Q0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c / lead
            quot[i - dd] = q
            for j in range(dd + 1):
                rem[i - dd + j] = rem[i - dd + j] - q * dcs[j]
        return Polynomial(quot), Polynomial(rem)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic greatest common divisor (Euclid's algorithm).

        Raises ValueError when both operands are zero.
        """
        a, b = self, other
        if a.is_zero() and b.is_zero():
            raise ValueError("gcd(0, 0) is undefined")
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def evaluate(self, point):
        """Horner evaluation at a rational point."""
        point = _as_rational(point)
        acc = _Q0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            if power == 0:
                term = str(c)
            elif power == 1:
                term = SYMBOL if c == 1 else f"-{SYMBOL}" if c == -1 else f"{c}*{SYMBOL}"
            else:
                base = f"{SYMBOL}^{power}"
                term = base if c == 1 else f"-{base}" if c == -1 else f"{c}*{base}"
            parts.append(term)
        out = parts[0]
        for term in parts[1:]:
            out += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return out


_P_ONE = Polynomial((1,))


class RationalFunction:
    """Quotient of two polynomials in the perturbation symbol, kept canonical:
    numerator and denominator coprime, denominator monic and nonzero.

    Supports ``+ - * /`` against other rational functions, rationals, and
    ints.  Equality of canonical forms is literal field-by-field equality,
    which is what makes the exact zero-pivot test decidable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial = _P_ONE):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = _P_ONE
        elif den.degree > 0 or num.degree > 0:
            g = num.gcd(den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lead = den.leading()
            if lead != 1:
                inv = _Q1 / lead
                num = num.scale(inv)
                den = den.scale(inv)
        else:
            lead = den.leading()
            if lead != 1:
                num = num.scale(_Q1 / lead)
                den = _P_ONE
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def constant(cls, value) -> "RationalFunction":
        return cls(Polynomial.constant(value))

    @classmethod
    def symbol(cls) -> "RationalFunction":
        return cls(Polynomial.symbol())

    @staticmethod
    def _coerce(value):
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, (int, type(_Q1))):
            return RationalFunction.constant(value)
        from fractions import Fraction

        if isinstance(value, Fraction):
            return RationalFunction.constant(value)
        return None

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self):
        """The underlying rational, for constant functions only."""
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.num.evaluate(_Q0)

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __eq__(self, other) -> bool:
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return self.num == coerced.num and self.den == coerced.den

    def __hash__(self):
        return hash((self.num, self.den))

    def _add(self, other: "RationalFunction", negate: bool) -> "RationalFunction":
        if self.is_constant() and other.is_constant():
            a = self.num.evaluate(_Q0)
            b = other.num.evaluate(_Q0)
            return RationalFunction.constant(a - b if negate else a + b)
        rhs = other.num if not negate else -other.num
        return RationalFunction(self.num * other.den + rhs * self.den,
                                self.den * other.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._add(other, False)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._add(other, True)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other._add(self, True)

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_constant() and other.is_constant():
            return RationalFunction.constant(
                self.num.evaluate(_Q0) * other.num.evaluate(_Q0))
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero function")
        if self.is_constant() and other.is_constant():
            return RationalFunction.constant(
                self.num.evaluate(_Q0) / other.num.evaluate(_Q0))
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other.__truediv__(self)

    def evaluate(self, point):
        """Value at a rational point; raises ZeroDivisionError on a pole."""
        den = self.den.evaluate(point)
        if den == 0:
            raise ZeroDivisionError(f"pole at {point}")
        return self.num.evaluate(point) / den

    def at_zero(self):
        """Value as the perturbation vanishes.

        Canonical form guarantees numerator and denominator share no root,
        so a zero denominator at 0 is a genuine pole: the represented
        quantity diverges, which callers treat as a singularity signal.
        """
        from .errors import PoleAtZeroError

        den = self.den.evaluate(_Q0)
        if den == 0:
            raise PoleAtZeroError(f"{self} diverges as {SYMBOL} -> 0")
        return self.num.evaluate(_Q0) / den

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self) -> str:
        if self.den == _P_ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"


def value_at_zero(v):
    """Collapse a scalar to its value as the perturbation vanishes.

    Rational-function values are evaluated at 0 (raising
    :class:`~perioband.errors.PoleAtZeroError` on a pole); plain rationals,
    ints, and floats pass through unchanged.
    """
    if isinstance(v, RationalFunction):
        return v.at_zero()
    if isinstance(v, int):
        return Rational(v)
    return v
