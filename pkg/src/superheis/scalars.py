"""Exact complex rationals.

Coefficients of every algebraic object in the package are Gaussian
rationals ``re + i*im`` with ``re, im`` held as :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["CQ", "I", "ONE", "ZERO", "as_cq", "as_fraction"]


def as_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected on purpose; nothing in this package is allowed to
    leak rounding into an identity check.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        if "." in x or "e" in x.lower():
            raise ValueError(f"decimal literal {x!r} is not an exact rational")
        return Fraction(x.strip())
    if isinstance(x, CQ):
        if x.im:
            raise ValueError(f"{x} is not real")
        return x.re
    raise TypeError(f"cannot interpret {type(x).__name__} {x!r} as an exact rational")


class CQ:
    """Immutable Gaussian rational."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", as_fraction(re))
        object.__setattr__(self, "im", as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("CQ is immutable")

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> "CQ":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return CQ._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return CQ._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if not self.im and not o.im:
            return CQ._raw(self.re * o.re, Fraction(0))
        return CQ._raw(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __neg__(self):
        return CQ._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "CQ":
        d = self.re * self.re + self.im * self.im
        if not d:
            raise ZeroDivisionError("inverse of zero")
        return CQ._raw(self.re / d, -self.im / d)

    def conjugate(self) -> "CQ":
        return CQ._raw(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return not self.im

    def __repr__(self):
        return f"CQ({_fmt(self.re)!r}, {_fmt(self.im)!r})"

    def __str__(self):
        if not self.im:
            return _fmt(self.re)
        if not self.re:
            return f"{_fmt(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"({_fmt(self.re)}{sign}{_fmt(abs(self.im))}i)"


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _coerce(x):
    if isinstance(x, CQ):
        return x
    if isinstance(x, bool):
        return NotImplemented
    if isinstance(x, (int, Fraction)):
        return CQ._raw(Fraction(x), Fraction(0))
    return NotImplemented


def as_cq(x) -> CQ:
    """Coerce ints, Fractions, ``"p/q"`` strings and CQ to CQ.

    Python ``complex`` values are accepted only when both parts are
    integral, so ``2+3j`` works but ``0.5j`` does not.
    """
    if isinstance(x, CQ):
        return x
    if isinstance(x, complex):
        if x.real != int(x.real) or x.imag != int(x.imag):
            raise ValueError(f"complex literal {x!r} has non-integral parts")
        return CQ(int(x.real), int(x.imag))
    return CQ(as_fraction(x))


ZERO = CQ(0)
ONE = CQ(1)
I = CQ(0, 1)
