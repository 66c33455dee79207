"""Exact scalars: rationals and Gaussian rationals (complex with rational parts).

Rationals are :class:`fractions.Fraction`, which already keeps the reduced form
with a positive denominator.  :class:`GaussianRational` pairs two of them.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import InvalidScalarError

ZERO = Fraction(0)
ONE = Fraction(1)


def rat_make(num: int, den: int = 1) -> Fraction:
    """Return the canonical rational ``num/den``.

    >>> rat_make(6, -4)
    Fraction(-3, 2)
    """
    if den == 0:
        raise InvalidScalarError(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (integers only, no decimals)."""
    if not isinstance(text, str):
        raise InvalidScalarError(f"expected a string rational, got {text!r}")
    m = _RAT_RE.match(text)
    if m is None:
        raise InvalidScalarError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return rat_make(num, den)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise InvalidScalarError(f"cannot interpret {x!r} as an exact rational")


class GaussianRational:
    """Immutable complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", as_fraction(re))
        object.__setattr__(self, "im", as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            raise InvalidScalarError("floating complex values are not exact; pass parts explicitly")
        return cls(x)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except (InvalidScalarError, TypeError):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        if self.im == 0 and o.im == 0:
            return GaussianRational(self.re * o.re)
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        num = self * o.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def format_scalar(z: GaussianRational) -> str:
    """Compact human form: ``3/2``, ``-1/2i``, ``1+2/3i``."""
    if z.im == 0:
        return format_rational(z.re)
    im = format_rational(abs(z.im)) + "i"
    if z.re == 0:
        return ("-" if z.im < 0 else "") + im
    return format_rational(z.re) + ("-" if z.im < 0 else "+") + im
