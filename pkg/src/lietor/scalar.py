"""Exact arithmetic in the Gaussian rationals Q(i).

Every structure constant, weight and matrix entry handled by lietor is a
:class:`Scalar`.  Both parts are :class:`fractions.Fraction`, so values are
always reduced with a positive denominator and equality is structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .errors import ParseError

__all__ = ["Scalar", "parse_scalar", "as_scalar", "ZERO", "ONE", "I"]

_RAT = r"-?\d+(?:/\d+)?"
_REAL_RE = re.compile(rf"^({_RAT})$")
_IMAG_RE = re.compile(rf"^({_RAT})?i$|^(-)i$")
_FULL_RE = re.compile(rf"^({_RAT})([+-])(\d+(?:/\d+)?)?i$")


def _rat(text):
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


class Scalar:
    """An element ``re + im*i`` of Q(i).  Instances are immutable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, Scalar):
            if im:
                raise TypeError("cannot combine a Scalar real part with an imaginary part")
            re, im = re.re, re.im
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("floats are not exact; pass int, Fraction or str")
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    # -- conversion -------------------------------------------------------
    @classmethod
    def parse(cls, text: str) -> "Scalar":
        return parse_scalar(text)

    def is_real(self) -> bool:
        return self.im == 0

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def __str__(self):
        re_, im = self.re, self.im
        if im == 0:
            return str(re_)
        if im == 1:
            imag = "i"
        elif im == -1:
            imag = "-i"
        else:
            imag = f"{im}i"
        if re_ == 0:
            return imag
        if im > 0:
            return f"{re_}+{im}i"
        return f"{re_}-{-im}i"

    def __repr__(self):
        return f"Scalar({str(self)!r})"

    # -- comparison -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Rational)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, Scalar):
            return other.re, other.im
        if isinstance(other, (int, Rational)):
            return other, 0
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re + o[0], self.im + o[1])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re - o[0], self.im - o[1])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(o[0] - self.re, o[1] - self.im)

    def __neg__(self):
        return Scalar(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.re, self.im
        c, d = o
        return Scalar(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c, d = o
        norm = c * c + d * d
        if norm == 0:
            raise ZeroDivisionError("Scalar division by zero")
        a, b = self.re, self.im
        return Scalar(Fraction(a * c + b * d) / norm, Fraction(b * c - a * d) / norm)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(*o) / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (ONE / self) ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)


def parse_scalar(text: str) -> Scalar:
    """Parse ``1``, ``-3/2``, ``1/2+2i``, ``3i``, ``i`` or ``-i``."""
    if not isinstance(text, str):
        raise ParseError(f"expected a scalar string, got {type(text).__name__}")
    s = text.strip().replace(" ", "")
    m = _REAL_RE.match(s)
    if m:
        return Scalar(_rat(m.group(1)))
    m = _IMAG_RE.match(s)
    if m:
        if m.group(2):
            return Scalar(0, -1)
        return Scalar(0, _rat(m.group(1)) if m.group(1) else 1)
    m = _FULL_RE.match(s)
    if m:
        imag = _rat(m.group(3)) if m.group(3) else Fraction(1)
        if m.group(2) == "-":
            imag = -imag
        return Scalar(_rat(m.group(1)), imag)
    raise ParseError(f"malformed scalar {text!r}")


def as_scalar(value) -> Scalar:
    """Coerce an int, Fraction, Scalar or scalar string to :class:`Scalar`."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, str):
        return parse_scalar(value)
    return Scalar(value)
