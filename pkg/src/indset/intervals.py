"""Outward-rounded interval arithmetic over MPFR.

Every operation rounds the lower endpoint toward -inf and the upper endpoint
toward +inf, so the true real result of an operation on the enclosed values is
always inside the returned interval.  Rationals enter exactly (as ``mpq``) and
are rounded once, outward, when converted to binary floating point.
"""

from __future__ import annotations

import functools
from decimal import ROUND_CEILING, ROUND_FLOOR, Context, Decimal
from fractions import Fraction
from typing import Union

import gmpy2
from gmpy2 import mpfr, mpq

DEFAULT_PREC = 256
MAX_PREC = 4096

RationalLike = Union[int, Fraction, str]


@functools.lru_cache(maxsize=None)
def _contexts(prec: int):
    down = gmpy2.context(precision=prec, round=gmpy2.RoundDown)
    up = gmpy2.context(precision=prec, round=gmpy2.RoundUp)
    return down, up


def to_fraction(x) -> Fraction:
    """Parse an int, Fraction, mpq or ``"p/q"`` string into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if type(x).__name__ == "mpq":
        return Fraction(int(x.numerator), int(x.denominator))
    if type(x).__name__ == "mpz":
        return Fraction(int(x))
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class Interval:
    """A closed interval [lo, hi] of reals with MPFR endpoints."""

    __slots__ = ("lo", "hi", "prec")

    def __init__(self, lo, hi, prec: int = DEFAULT_PREC):
        if not lo <= hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi
        self.prec = prec

    @classmethod
    def exact(cls, q, prec: int = DEFAULT_PREC) -> Interval:
        """Tightest enclosure of the rational ``q`` at ``prec`` bits."""
        q = to_fraction(q)
        down, up = _contexts(prec)
        v = mpq(q.numerator, q.denominator)
        return cls(mpfr(v, 0, down), mpfr(v, 0, up), prec)

    @property
    def precision_bits(self) -> int:
        return self.prec

    def _coerce(self, other) -> Interval:
        if isinstance(other, Interval):
            return other
        return Interval.exact(other, self.prec)

    def _ctx(self, other: Interval | None = None):
        prec = self.prec if other is None else max(self.prec, other.prec)
        return prec, _contexts(prec)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other) -> Interval:
        other = self._coerce(other)
        prec, (down, up) = self._ctx(other)
        return Interval(down.add(self.lo, other.lo), up.add(self.hi, other.hi), prec)

    __radd__ = __add__

    def __neg__(self) -> Interval:
        # plain unary minus would round in gmpy2's global 53-bit context
        _, (down, up) = self._ctx()
        return Interval(down.minus(self.hi), up.minus(self.lo), self.prec)

    def __sub__(self, other) -> Interval:
        other = self._coerce(other)
        prec, (down, up) = self._ctx(other)
        return Interval(down.sub(self.lo, other.hi), up.sub(self.hi, other.lo), prec)

    def __rsub__(self, other) -> Interval:
        return self._coerce(other) - self

    def __mul__(self, other) -> Interval:
        other = self._coerce(other)
        prec, (down, up) = self._ctx(other)
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        if a >= 0 and c >= 0:
            return Interval(down.mul(a, c), up.mul(b, d), prec)
        los = [down.mul(x, y) for x in (a, b) for y in (c, d)]
        his = [up.mul(x, y) for x in (a, b) for y in (c, d)]
        return Interval(min(los), max(his), prec)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Interval:
        other = self._coerce(other)
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("divisor interval contains zero")
        prec, (down, up) = self._ctx(other)
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        los = [down.div(x, y) for x in (a, b) for y in (c, d)]
        his = [up.div(x, y) for x in (a, b) for y in (c, d)]
        return Interval(min(los), max(his), prec)

    def __rtruediv__(self, other) -> Interval:
        return self._coerce(other) / self

    def log(self) -> Interval:
        if not self.lo > 0:
            raise ValueError("log of an interval that is not strictly positive")
        prec, (down, up) = self._ctx()
        return Interval(down.log(self.lo), up.log(self.hi), prec)

    def exp(self) -> Interval:
        prec, (down, up) = self._ctx()
        return Interval(down.exp(self.lo), up.exp(self.hi), prec)

    def __pow__(self, y) -> Interval:
        """Power with a rational or interval exponent; the base must be > 0
        unless the exponent is a nonnegative integer."""
        if isinstance(y, int) and y >= 0:
            result = Interval.exact(1, self.prec)
            base = self
            while y:
                if y & 1:
                    result = result * base
                base = base * base
                y >>= 1
            return result
        return (self.log() * y).exp()

    # comparisons --------------------------------------------------------

    def certainly_lt(self, other) -> bool:
        return self.hi < self._coerce(other).lo

    def certainly_gt(self, other) -> bool:
        return self.lo > self._coerce(other).hi

    def overlaps(self, other) -> bool:
        other = self._coerce(other)
        return self.lo <= other.hi and other.lo <= self.hi

    def contains(self, q) -> bool:
        """True if the exact rational ``q`` lies in the interval."""
        q = to_fraction(q)
        v = mpq(q.numerator, q.denominator)
        return mpq(self.lo) <= v <= mpq(self.hi)

    def contains_interval(self, other: Interval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    @property
    def width(self):
        _, (_, up) = self._ctx()
        return up.sub(self.hi, self.lo)

    @property
    def mid(self):
        _, (down, _) = self._ctx()
        return down.div(down.add(self.lo, self.hi), 2)

    def decimal(self, digits: int | None = None) -> tuple[str, str]:
        """Endpoints as decimal strings, rounded outward.

        ``digits`` defaults to enough significant digits for the precision.
        """
        if digits is None:
            digits = int(self.prec * 0.30103) + 2
        return (_to_decimal(self.lo, digits, ROUND_FLOOR),
                _to_decimal(self.hi, digits, ROUND_CEILING))

    def __repr__(self) -> str:
        lo, hi = self.decimal(20)
        return f"Interval([{lo}, {hi}], prec={self.prec})"


LogInterval = Interval


def _to_decimal(x, digits: int, rounding) -> str:
    num, den = mpq(x).as_integer_ratio()
    ctx = Context(prec=digits, rounding=rounding)
    return str(ctx.divide(Decimal(int(num)), Decimal(int(den))))


def log_rational(q, prec: int = DEFAULT_PREC) -> Interval:
    """Enclosure of log(q) for a positive exact rational ``q``."""
    q = to_fraction(q)
    if q <= 0:
        raise ValueError("log of a nonpositive rational")
    return Interval.exact(q, prec).log()


def rational_power(base, exponent, prec: int = DEFAULT_PREC) -> Interval:
    """Enclosure of base**exponent for rational base > 0 and rational exponent.

    Integer exponents are evaluated exactly before rounding.
    """
    base = to_fraction(base)
    exponent = to_fraction(exponent)
    if exponent.denominator == 1:
        return Interval.exact(base ** int(exponent), prec)
    if base <= 0:
        raise ValueError("non-integer power of a nonpositive base")
    return (log_rational(base, prec) * exponent).exp()
