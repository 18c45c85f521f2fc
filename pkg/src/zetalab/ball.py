"""Midpoint-radius ball arithmetic over dyadic rationals.

A ball represents the closed interval [mid - rad, mid + rad] with
mid = man * 2**exp and rad = rad_man * 2**rad_exp, all integers kept
exact. Every operation returns a ball that encloses the exact image of
its input intervals: midpoints are truncated to the working precision
and the truncation is charged to the radius, radii are only ever
rounded up. Precision is carried explicitly in a PrecisionContext;
there is no ambient global state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Union

__all__ = [
    "Comparison",
    "PrecisionContext",
    "RealBall",
    "Verdict",
    "ZeroStraddleError",
    "absolute",
    "add",
    "compare_to_rational",
    "div",
    "encloses",
    "mul",
    "neg",
    "pi",
    "pow_int",
    "recip",
    "sub",
]

Rational = Union[int, Fraction]

_RAD_BITS = 32


class ZeroStraddleError(ZeroDivisionError):
    """Raised when dividing by a ball whose interval contains zero."""


class Comparison(Enum):
    """Certified three-way comparison of a ball against an exact rational."""

    CERTAINLY_LESS = "certainly_less"
    CERTAINLY_GREATER = "certainly_greater"
    CONTAINS = "contains"


class Verdict(Enum):
    """Outcome of a certified predicate: only True/False when the interval
    comparison is decisive, Indeterminate otherwise."""

    TRUE = "true"
    FALSE = "false"
    INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision in bits plus guard bits for intermediate rounding."""

    working_bits: int = 256
    guard_bits: int = 16

    def __post_init__(self) -> None:
        if self.working_bits < 64:
            raise ValueError("working_bits must be at least 64")
        if self.guard_bits < 8:
            raise ValueError("guard_bits must be at least 8")

    @property
    def prec(self) -> int:
        return self.working_bits + self.guard_bits

    def doubled(self) -> "PrecisionContext":
        return PrecisionContext(2 * self.working_bits, self.guard_bits)


def _trim(man: int, exp: int, prec: int) -> tuple[int, int, int | None]:
    # Truncate toward zero to at most prec mantissa bits.
    # Discarded magnitude is < 2**lost_exp (None when exact).
    mag = man if man >= 0 else -man
    extra = mag.bit_length() - prec
    if extra <= 0:
        return man, exp, None
    if man >= 0:
        out = man >> extra
    else:
        out = -((-man) >> extra)
    exact = (out << extra) == man if man >= 0 else ((-out) << extra) == -man
    return out, exp + extra, None if exact else exp + extra


def _rad_up(m: int, e: int) -> tuple[int, int]:
    # Round a nonnegative dyadic up to at most _RAD_BITS mantissa bits.
    extra = m.bit_length() - _RAD_BITS
    if extra <= 0:
        return m, e
    out = m >> extra
    if (out << extra) != m:
        out += 1
    return out, e + extra


def _rad_add(am: int, ae: int, bm: int, be: int) -> tuple[int, int]:
    if am == 0:
        return _rad_up(bm, be)
    if bm == 0:
        return _rad_up(am, ae)
    if ae < be:
        am, ae, bm, be = bm, be, am, ae
    shift = ae - be
    if shift > 4 * _RAD_BITS:
        # The smaller term is far below one ulp of the larger; absorb it.
        return _rad_up(am + 1, ae)
    return _rad_up((am << shift) + bm, be)


def _rad_mul(am: int, ae: int, bm: int, be: int) -> tuple[int, int]:
    if am == 0 or bm == 0:
        return 0, 0
    return _rad_up(am * bm, ae + be)


def _dyadic_fraction(m: int, e: int) -> Fraction:
    if e >= 0:
        return Fraction(m << e)
    return Fraction(m, 1 << -e)


def _fraction_to_dyadic(fr: Fraction, prec: int) -> tuple[int, int, int | None]:
    # Truncate a rational toward zero onto the dyadic grid with about
    # prec significant bits; discarded magnitude < 2**err_exp.
    num, den = fr.numerator, fr.denominator
    if num == 0:
        return 0, 0, None
    neg_sign = num < 0
    mag = -num if neg_sign else num
    e = mag.bit_length() - den.bit_length() - prec
    if e >= 0:
        q, r = divmod(mag, den << e)
    else:
        q, r = divmod(mag << -e, den)
    man = -q if neg_sign else q
    return man, e, None if r == 0 else e


def _rad_from_fraction(fr: Fraction) -> tuple[int, int]:
    # Upper bound a nonnegative rational by a short dyadic.
    if fr == 0:
        return 0, 0
    num, den = fr.numerator, fr.denominator
    e = num.bit_length() - den.bit_length() - _RAD_BITS
    if e >= 0:
        q, r = divmod(num, den << e)
    else:
        q, r = divmod(num << -e, den)
    if r:
        q += 1
    return _rad_up(q, e)


@dataclass(frozen=True)
class RealBall:
    """Closed interval man*2**exp +- rad_man*2**rad_exp."""

    man: int
    exp: int
    rad_man: int = 0
    rad_exp: int = 0

    def __post_init__(self) -> None:
        if self.rad_man < 0:
            raise ValueError("radius must be nonnegative")
        if self.man == 0 and self.exp != 0:
            object.__setattr__(self, "exp", 0)
        if self.rad_man == 0 and self.rad_exp != 0:
            object.__setattr__(self, "rad_exp", 0)

    @classmethod
    def from_int(cls, n: int) -> "RealBall":
        return cls(n, 0, 0, 0)

    @classmethod
    def from_fraction(cls, fr: Rational, ctx: PrecisionContext) -> "RealBall":
        fr = Fraction(fr)
        man, exp, lost = _fraction_to_dyadic(fr, ctx.prec)
        if lost is None:
            return cls(man, exp, 0, 0)
        rm, re = _rad_up(1, lost)
        return cls(man, exp, rm, re)

    @classmethod
    def from_interval(cls, lo: Fraction, hi: Fraction, ctx: PrecisionContext) -> "RealBall":
        if lo > hi:
            raise ValueError("empty interval")
        mid = (lo + hi) / 2
        man, exp, lost = _fraction_to_dyadic(mid, ctx.prec)
        rm, re = _rad_from_fraction((hi - lo) / 2)
        if lost is not None:
            rm, re = _rad_add(rm, re, 1, lost)
        return cls(man, exp, rm, re)

    # -- exact views ------------------------------------------------------

    def midpoint(self) -> Fraction:
        return _dyadic_fraction(self.man, self.exp)

    def radius(self) -> Fraction:
        return _dyadic_fraction(self.rad_man, self.rad_exp)

    def lower(self) -> Fraction:
        return self.midpoint() - self.radius()

    def upper(self) -> Fraction:
        return self.midpoint() + self.radius()

    @property
    def is_exact(self) -> bool:
        return self.rad_man == 0

    def contains_rational(self, r: Rational) -> bool:
        return self.lower() <= Fraction(r) <= self.upper()

    def contains_zero(self) -> bool:
        return self.contains_rational(0)

    def mag_upper(self) -> Fraction:
        """Largest magnitude over the interval."""
        return max(abs(self.lower()), abs(self.upper()))

    def mag_lower(self) -> Fraction:
        """Distance of the interval from zero (0 if it contains zero)."""
        lo, hi = self.lower(), self.upper()
        if lo <= 0 <= hi:
            return Fraction(0)
        return min(abs(lo), abs(hi))

    # -- decimal views ----------------------------------------------------

    def _decimal_exponent(self, mag: Fraction) -> int:
        # Smallest p with mag < 10**p, for mag > 0.
        num, den = mag.numerator, mag.denominator
        p = math.floor((num.bit_length() - den.bit_length()) * 0.30102999566398)
        while mag >= Fraction(10) ** p:
            p += 1
        while mag < Fraction(10) ** (p - 1):
            p -= 1
        return p

    def decimal(self, digits: int) -> str:
        """Midpoint truncated toward zero to `digits` significant digits."""
        if digits < 1:
            raise ValueError("digits must be positive")
        mid = self.midpoint()
        if mid == 0:
            return "0"
        sign = "-" if mid < 0 else ""
        mag = abs(mid)
        p = self._decimal_exponent(mag)
        scaled = mag * Fraction(10) ** (digits - p)
        body = str(scaled.numerator // scaled.denominator)
        if len(body) < digits:
            body = "0" * (digits - len(body)) + body
        if p >= digits:
            return sign + body + "0" * (p - digits)
        if p > 0:
            return sign + body[:p] + "." + body[p:]
        return sign + "0." + "0" * (-p) + body

    def decimal_exponent(self) -> int:
        """Smallest p with |midpoint| < 10**p; the leading digit sits at 10**(p-1)."""
        mid = self.midpoint()
        if mid == 0:
            raise ValueError("zero midpoint has no decimal exponent")
        return self._decimal_exponent(abs(mid))

    def radius_decimal(self) -> str:
        """Upper bound on the radius, two significant digits, rounded up."""
        rad = self.radius()
        if rad == 0:
            return "0"
        p = self._decimal_exponent(rad)
        scaled = rad * Fraction(10) ** (2 - p)
        m = -((-scaled.numerator) // scaled.denominator)  # ceil
        if m >= 100:
            m = 10
            p += 1
        s = str(m)
        return f"{s[0]}.{s[1]}e{p - 1:+d}"

    def __repr__(self) -> str:
        if self.man == 0 and self.rad_man == 0:
            return "RealBall(0)"
        mid = self.decimal(20) if self.man else "0"
        return f"RealBall({mid} +- {self.radius_decimal()})"


# -- arithmetic ------------------------------------------------------------


def _make(man: int, exp: int, lost: int | None, rm: int, re: int) -> RealBall:
    if lost is not None:
        rm, re = _rad_add(rm, re, 1, lost)
    return RealBall(man, exp, rm, re)


def add(a: RealBall, b: RealBall, ctx: PrecisionContext) -> RealBall:
    e = min(a.exp, b.exp)
    m = (a.man << (a.exp - e)) + (b.man << (b.exp - e))
    man, exp, lost = _trim(m, e, ctx.prec)
    rm, re = _rad_add(a.rad_man, a.rad_exp, b.rad_man, b.rad_exp)
    return _make(man, exp, lost, rm, re)


def neg(a: RealBall) -> RealBall:
    return RealBall(-a.man, a.exp, a.rad_man, a.rad_exp)


def sub(a: RealBall, b: RealBall, ctx: PrecisionContext) -> RealBall:
    return add(a, neg(b), ctx)


def mul(a: RealBall, b: RealBall, ctx: PrecisionContext) -> RealBall:
    man, exp, lost = _trim(a.man * b.man, a.exp + b.exp, ctx.prec)
    am = a.man if a.man >= 0 else -a.man
    bm = b.man if b.man >= 0 else -b.man
    rm, re = _rad_mul(am, a.exp, b.rad_man, b.rad_exp)
    t2 = _rad_mul(bm, b.exp, a.rad_man, a.rad_exp)
    rm, re = _rad_add(rm, re, *t2)
    t3 = _rad_mul(a.rad_man, a.rad_exp, b.rad_man, b.rad_exp)
    rm, re = _rad_add(rm, re, *t3)
    return _make(man, exp, lost, rm, re)


def absolute(a: RealBall) -> RealBall:
    lo, hi = a.lower(), a.upper()
    if lo >= 0:
        return a
    if hi <= 0:
        return neg(a)
    # Interval straddles zero: |a| is [0, max(-lo, hi)], an exact dyadic.
    m = max(-lo, hi)
    half_num = m.numerator
    # m is dyadic, so m/2 is exact: represent [0, m] as m/2 +- m/2.
    e = -(m.denominator.bit_length() - 1) - 1
    return RealBall(half_num, e, half_num, e)


def recip(a: RealBall, ctx: PrecisionContext) -> RealBall:
    lo, hi = a.lower(), a.upper()
    if lo <= 0 <= hi:
        raise ZeroStraddleError("interval contains zero")
    return RealBall.from_interval(1 / hi, 1 / lo, ctx)


def div(a: RealBall, b: RealBall, ctx: PrecisionContext) -> RealBall:
    return mul(a, recip(b, ctx), ctx)


def pow_int(a: RealBall, k: int, ctx: PrecisionContext) -> RealBall:
    if k == 0:
        return RealBall.from_int(1)
    if k < 0:
        return recip(pow_int(a, -k, ctx), ctx)
    result: RealBall | None = None
    base = a
    while k:
        if k & 1:
            result = base if result is None else mul(result, base, ctx)
        k >>= 1
        if k:
            base = mul(base, base, ctx)
    assert result is not None
    return result


def compare_to_rational(a: RealBall, r: Rational) -> Comparison:
    r = Fraction(r)
    if a.upper() < r:
        return Comparison.CERTAINLY_LESS
    if a.lower() > r:
        return Comparison.CERTAINLY_GREATER
    return Comparison.CONTAINS


def encloses(outer: RealBall, inner: RealBall) -> bool:
    return outer.lower() <= inner.lower() and inner.upper() <= outer.upper()


# -- pi --------------------------------------------------------------------


def _atan_inv(k: int, bits: int) -> tuple[Fraction, Fraction]:
    # atan(1/k) for integer k >= 2 by the Taylor series; alternating with
    # strictly decreasing terms, so the tail is bounded by the next term.
    total = Fraction(0)
    i = 0
    kk = k
    k2 = k * k
    while True:
        term = Fraction(1, (2 * i + 1) * kk)
        if term < Fraction(1, 1 << bits):
            return total, term
        total += term if i % 2 == 0 else -term
        kk *= k2
        i += 1


@lru_cache(maxsize=None)
def _pi_parts(prec: int) -> tuple[int, int, int, int]:
    bits = prec + 8
    a5, t5 = _atan_inv(5, bits)
    a239, t239 = _atan_inv(239, bits)
    value = 16 * a5 - 4 * a239
    err = 16 * t5 + 4 * t239
    ball = RealBall.from_interval(value - err, value + err, PrecisionContext(max(prec - 16, 64), 16))
    return ball.man, ball.exp, ball.rad_man, ball.rad_exp


def pi(ctx: PrecisionContext) -> RealBall:
    """Enclosure of pi with radius at most 2**-(working_bits - guard_bits)."""
    man, exp, rm, re = _pi_parts(ctx.prec)
    return RealBall(man, exp, rm, re)
