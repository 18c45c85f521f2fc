"""Continued fractions and rational-approximation checks on certified
intervals.

A quotient is emitted only when every point of the input interval has
the same floor, so an expansion computed from a ball is a certified
prefix of the expansion of every number the ball contains. Expansions
of exact rationals run the plain Euclidean algorithm and finish with
termination EXACT.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence, Union

from .ball import RealBall, Verdict

__all__ = [
    "CFExpansion",
    "Convergent",
    "ScanEntry",
    "ScanReport",
    "Termination",
    "cf_expand",
    "convergents",
    "dirichlet_check",
    "irrationality_scan",
    "mu_estimate",
    "rationality_lower_bound_check",
]

Number = Union[RealBall, Fraction, int]


class Termination(Enum):
    MAX_TERMS = "max_terms"
    EXACT = "exact"
    PRECISION_EXHAUSTED = "precision_exhausted"


@dataclass(frozen=True)
class CFExpansion:
    quotients: tuple[int, ...]
    termination: Termination


@dataclass(frozen=True)
class Convergent:
    index: int
    p: int
    q: int

    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


def _endpoints(x: Number) -> tuple[Fraction, Fraction]:
    if isinstance(x, RealBall):
        return x.lower(), x.upper()
    fr = Fraction(x)
    return fr, fr


def cf_expand(x: Number, max_terms: int = 24) -> CFExpansion:
    """Certified continued-fraction prefix of x, at most max_terms quotients."""
    if max_terms < 1:
        raise ValueError("max_terms must be at least 1")
    lo, hi = _endpoints(x)
    quotients: list[int] = []
    while True:
        al = lo.numerator // lo.denominator
        ah = hi.numerator // hi.denominator
        if al != ah:
            return CFExpansion(tuple(quotients), Termination.PRECISION_EXHAUSTED)
        quotients.append(al)
        fl, fh = lo - al, hi - al
        if fh == 0:
            return CFExpansion(tuple(quotients), Termination.EXACT)
        if fl == 0:
            # One endpoint is exactly an integer but the other is not:
            # the next quotient is unbounded over the interval.
            return CFExpansion(tuple(quotients), Termination.PRECISION_EXHAUSTED)
        if len(quotients) == max_terms:
            return CFExpansion(tuple(quotients), Termination.MAX_TERMS)
        lo, hi = 1 / fh, 1 / fl


def convergents(cf: CFExpansion | Sequence[int]) -> list[Convergent]:
    """Convergents p_k/q_k of a quotient sequence, by the standard recurrence."""
    quotients = cf.quotients if isinstance(cf, CFExpansion) else tuple(cf)
    out: list[Convergent] = []
    p_prev, q_prev = 0, 1
    p_curr, q_curr = 1, 0
    for k, a in enumerate(quotients):
        p_prev, p_curr = p_curr, a * p_curr + p_prev
        q_prev, q_curr = q_curr, a * q_curr + q_prev
        out.append(Convergent(k, p_curr, q_curr))
    return out


def dirichlet_check(x: Number, conv: Convergent) -> Verdict:
    """Does |x - p/q| < 1/q^2 hold? Certified over the whole input set."""
    target = conv.value()
    bound = Fraction(1, conv.q**2)
    lo, hi = _endpoints(x)
    dlo, dhi = _abs_interval(lo - target, hi - target)
    if dhi < bound:
        return Verdict.TRUE
    if dlo >= bound:
        return Verdict.FALSE
    return Verdict.INDETERMINATE


def rationality_lower_bound_check(x: Fraction, p: int, q: int) -> bool:
    """Exact check of |x - p/q| >= 1/(Bq) where B is the denominator of x.

    Every rational x = A/B distinct from p/q satisfies this, since the
    difference is a nonzero integer over Bq. Raises if x equals p/q.
    """
    if q < 1:
        raise ValueError("q must be positive")
    diff = abs(x - Fraction(p, q))
    if diff == 0:
        raise ValueError("x equals p/q; the lower bound is vacuous")
    return diff >= Fraction(1, x.denominator * q)


def mu_estimate(convs: Sequence[Convergent]) -> list[tuple[int, float]]:
    """Exponent estimates 1 + ln(q_{n+1})/ln(q_n) from consecutive convergents.

    Pairs with q_n == 1 carry no information and are skipped.
    """
    out: list[tuple[int, float]] = []
    for a, b in zip(convs, convs[1:]):
        if a.q <= 1:
            continue
        out.append((a.index, 1.0 + math.log(b.q) / math.log(a.q)))
    return out


def _abs_interval(lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    if lo >= 0:
        return lo, hi
    if hi <= 0:
        return -hi, -lo
    return Fraction(0), max(-lo, hi)


def _log_fraction(fr: Fraction) -> float:
    return math.log(fr.numerator) - math.log(fr.denominator)


@dataclass(frozen=True)
class ScanEntry:
    index: int
    p: int
    q: int
    e_low: float
    e_high: float


@dataclass(frozen=True)
class ScanReport:
    """Per-convergent exponents e_n with |x - p_n/q_n| = q_n^(-e_n).

    An entry is a witness when its whole exponent interval sits at or
    above 1 + delta. Convergents the input interval cannot separate
    from x are counted as indeterminate and get no entry.
    """

    delta: float
    entries: tuple[ScanEntry, ...]
    witnessed: int
    indeterminate: int


def irrationality_scan(x: Number, convs: Sequence[Convergent], delta: float) -> ScanReport:
    lo, hi = _endpoints(x)
    entries: list[ScanEntry] = []
    witnessed = 0
    indeterminate = 0
    for conv in convs:
        if conv.q <= 1:
            continue
        target = conv.value()
        dlo, dhi = _abs_interval(lo - target, hi - target)
        if dlo == 0:
            indeterminate += 1
            continue
        lq = math.log(conv.q)
        e_low = -_log_fraction(dhi) / lq
        e_high = -_log_fraction(dlo) / lq
        entries.append(ScanEntry(conv.index, conv.p, conv.q, e_low, e_high))
        if e_low >= 1.0 + delta:
            witnessed += 1
    return ScanReport(delta, tuple(entries), witnessed, indeterminate)
