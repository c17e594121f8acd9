"""Exact arithmetic in Q(i).

A `Scalar` is a Gaussian rational a + b*i with `Fraction` components.
Everything downstream (matrices, structure constants, cochains) is built on
this type, so all computations in the package are exact and every comparison
is an exact equality.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Scalar:
    """A Gaussian rational re + im*i, stored reduced via `Fraction`."""

    re: Fraction
    im: Fraction

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other):
        other = as_scalar(other)
        if not other:
            return self
        if not self:
            return other
        return Scalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        return as_scalar(other) + (-self)

    def __mul__(self, other):
        other = as_scalar(other)
        if not self or not other:
            return ZERO
        if not self.im and not other.im:
            return Scalar(self.re * other.re, _F0)
        return Scalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return Scalar(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * as_scalar(other).inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def __str__(self) -> str:
        return format_scalar(self)


_F0 = Fraction(0)

ZERO = Scalar(Fraction(0), Fraction(0))
ONE = Scalar(Fraction(1), Fraction(0))
I = Scalar(Fraction(0), Fraction(1))


def as_scalar(x) -> Scalar:
    """Coerce an int, Fraction or Scalar into a Scalar."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Scalar(Fraction(x), Fraction(0))
    raise TypeError(f"cannot interpret {x!r} as a Q(i) scalar")


def scalar(re, im=0) -> Scalar:
    return Scalar(Fraction(re), Fraction(im))


class ScalarParseError(ValueError):
    """Malformed scalar text; carries the offending position."""

    def __init__(self, text: str, pos: int, message: str):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


# term := rational 'i'? | 'i', rational := int ('/' posint)?
_TERM = re.compile(r"([+-]?)(?:(\d+(?:/\d+)?)(i?)|(i))")


def parse_scalar(text: str) -> Scalar:
    """Parse `text` per the grammar `term (('+'|'-') term)?`.

    Whitespace is insignificant.  Examples: "2", "-1/2+3i", "i", "3-i".
    """
    compact = text.replace(" ", "").replace("\t", "")
    if not compact:
        raise ScalarParseError(text, 0, "empty scalar")
    pos = 0
    result = ZERO
    seen = 0
    while pos < len(compact):
        m = _TERM.match(compact, pos)
        if m is None or (seen > 0 and m.group(1) == ""):
            raise ScalarParseError(text, pos, "expected a term")
        if seen >= 2:
            raise ScalarParseError(text, pos, "too many terms")
        sign = -1 if m.group(1) == "-" else 1
        if m.group(4) is not None:
            value = I
        else:
            try:
                rat = Fraction(m.group(2))
            except ZeroDivisionError:
                raise ScalarParseError(text, pos, "zero denominator") from None
            value = Scalar(Fraction(0), rat) if m.group(3) else Scalar(rat, Fraction(0))
        result = result + sign * value
        pos = m.end()
        seen += 1
    return result


def _format_fraction(f: Fraction, imag: bool) -> str:
    if imag:
        if f == 1:
            return "i"
        if f == -1:
            return "-i"
        return f"{f}i"
    return str(f)


def format_scalar(x: Scalar) -> str:
    """Canonical text form; round-trips through `parse_scalar`."""
    if not x:
        return "0"
    parts = []
    if x.re:
        parts.append(str(x.re))
    if x.im:
        s = _format_fraction(x.im, imag=True)
        if parts and not s.startswith("-"):
            s = "+" + s
        parts.append(s)
    return "".join(parts)


def _fraction_sqrt(f: Fraction) -> Fraction | None:
    if f < 0:
        return None
    pn = math.isqrt(f.numerator)
    pd = math.isqrt(f.denominator)
    if pn * pn != f.numerator or pd * pd != f.denominator:
        return None
    return Fraction(pn, pd)


def sqrt_scalar(x: Scalar) -> Scalar | None:
    """A square root of `x` in Q(i), or None if there is none.

    Solves u^2 - v^2 = re, 2uv = im; u^2 = (re + r)/2 with r = |x|, so the
    root exists iff both |x| and (re + r)/2 are rational squares.
    """
    if not x:
        return ZERO
    r = _fraction_sqrt(x.re * x.re + x.im * x.im)
    if r is None:
        return None
    u = _fraction_sqrt((x.re + r) / 2)
    if u is None:
        return None
    if u == 0:
        v = _fraction_sqrt((r - x.re) / 2)
        if v is None:
            return None
        root = Scalar(Fraction(0), v)
    else:
        root = Scalar(u, x.im / (2 * u))
    assert root * root == x
    return root
