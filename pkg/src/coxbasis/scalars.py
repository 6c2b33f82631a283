"""Exact scalar arithmetic: rationals and real quadratic extensions.

Crystallographic reflection groups live entirely inside
``fractions.Fraction``.  The dihedral groups I2(5) and I2(8) and the
icosahedral group H3 need a real quadratic extension, implemented here as
``Quad``: a number a + b*sqrt(d) with exact rational parts and a fixed
square-free d > 1.

The two kinds interoperate.  Arithmetic between int/Fraction and Quad
promotes to Quad, and a Quad whose irrational part cancels demotes back to
Fraction, so downstream code never branches on the scalar type.  It relies
only on field operations, comparison with 0 and 1, a total (real-number)
order, and hashability.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction, "Quad"]

_RATIONAL = (int, Fraction)


def _as_fraction(x: int | Fraction) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Quad:
    """An element a + b*sqrt(d) of the real quadratic field Q(sqrt(d))."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: int | Fraction, b: int | Fraction, d: int) -> None:
        if d <= 1:
            raise ValueError("quadratic discriminant must be an integer > 1")
        object.__setattr__(self, "a", _as_fraction(a))
        object.__setattr__(self, "b", _as_fraction(b))
        object.__setattr__(self, "d", d)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Quad is immutable")

    def _make(self, a: Fraction, b: Fraction) -> Scalar:
        # cancellation of the sqrt part demotes to a plain rational
        if b == 0:
            return a
        return Quad(a, b, self.d)

    def _coerce(self, other: object) -> "Quad | None":
        if isinstance(other, Quad):
            if other.d != self.d:
                raise ValueError("mixed quadratic fields: sqrt(%d) vs sqrt(%d)" % (self.d, other.d))
            return other
        if isinstance(other, _RATIONAL):
            return Quad(_as_fraction(other), Fraction(0), self.d)
        return None

    def __add__(self, other: object) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._make(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: object) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._make(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: object) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__sub__(self)

    def __neg__(self) -> "Quad":
        return Quad(-self.a, -self.b, self.d)

    def __mul__(self, other: object) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._make(self.a * o.a + self.b * o.b * self.d, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        n = self.a * self.a - self.b * self.b * self.d
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(%d))" % self.d)
        return self._make(self.a / n, -self.b / n)

    def __truediv__(self, other: object) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        inv = o.inverse()
        return self.__mul__(inv)

    def __rtruediv__(self, other: object) -> Scalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __pow__(self, n: int) -> Scalar:
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out: Scalar = Fraction(1)
        base: Scalar = self
        k = n
        while k:
            if k & 1:
                out = base * out
            base = base * base
            k >>= 1
        return out

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Quad):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, _RATIONAL):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        # agrees with Fraction when the sqrt part vanishes
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def sign(self) -> int:
        """Sign of the real number a + b*sqrt(d), computed exactly."""
        a, b = self.a, self.b
        if b == 0:
            return -1 if a < 0 else (0 if a == 0 else 1)
        if a == 0:
            return -1 if b < 0 else 1
        if a > 0 and b > 0:
            return 1
        if a < 0 and b < 0:
            return -1
        # opposite signs: compare a^2 with b^2 d
        lhs, rhs = a * a, b * b * self.d
        if a > 0:  # b < 0
            return 1 if lhs > rhs else (-1 if lhs < rhs else 0)
        return 1 if lhs < rhs else (-1 if lhs > rhs else 0)

    def _cmp(self, other: object) -> "int | None":
        o = self._coerce(other)
        if o is None:
            return None
        diff = self - o
        if isinstance(diff, _RATIONAL):
            return -1 if diff < 0 else (0 if diff == 0 else 1)
        return diff.sign()

    def __lt__(self, other: object) -> bool:
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c < 0

    def __le__(self, other: object) -> bool:
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c <= 0

    def __gt__(self, other: object) -> bool:
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c > 0

    def __ge__(self, other: object) -> bool:
        c = self._cmp(other)
        if c is None:
            return NotImplemented
        return c >= 0

    def __repr__(self) -> str:
        return "Quad(%r, %r, %d)" % (self.a, self.b, self.d)

    def __str__(self) -> str:
        return format_scalar(self)


def scalar_inverse(x: Scalar) -> Scalar:
    if isinstance(x, Quad):
        return x.inverse()
    return Fraction(1) / _as_fraction(x)


def format_scalar(x: Scalar) -> str:
    """Render a scalar as an exact string such as ``-3/4`` or ``1/2+3*sqrt(5)``."""
    if isinstance(x, _RATIONAL):
        return str(_as_fraction(x))
    if x.b == 0:
        return str(x.a)
    b_abs = -x.b if x.b < 0 else x.b
    sqrt_part = "sqrt(%d)" % x.d if b_abs == 1 else "%s*sqrt(%d)" % (b_abs, x.d)
    sign = "-" if x.b < 0 else "+"
    if x.a == 0:
        return sqrt_part if sign == "+" else "-" + sqrt_part
    return "%s%s%s" % (x.a, sign, sqrt_part)


_SQRT_TERM = re.compile(r"^(?:(?P<coeff>-?\d+(?:/\d+)?)\*)?(?P<neg>-?)sqrt\((?P<d>\d+)\)$")


def parse_scalar(s: str) -> Scalar:
    """Inverse of :func:`format_scalar`."""
    s = s.strip().replace(" ", "")
    if "sqrt" not in s:
        return Fraction(s)
    # split off a leading rational part, keeping the sign of the sqrt term
    cut = s.find("sqrt")
    head = s[:cut]
    m = re.match(r"^(-?\d+(?:/\d+)?)(?=[+-])", head)
    a = Fraction(0)
    if m:
        a = Fraction(m.group(1))
        head = head[m.end():]
    term = head + s[cut:]
    if head.startswith("+"):
        term = term[1:]
    mt = _SQRT_TERM.match(term)
    if mt is None:
        raise ValueError("cannot parse scalar %r" % s)
    b = Fraction(mt.group("coeff")) if mt.group("coeff") else Fraction(1)
    if mt.group("neg"):
        b = -b
    d = int(mt.group("d"))
    out = Quad(a, b, d)
    return out if out.b != 0 else a
