"""Certified values of zeta(s), the beta series L(s) = 1 - 3^-s + 5^-s - ...,
their closed forms, and the summatory experiments around the product
zeta(s) L(s).

Evaluation uses Chebyshev acceleration of alternating series: for
terms a_k that are moments of a positive measure on [0, 1] the weighted
partial sum with weights drawn from T_n(3) differs from the full sum by
at most a_0 / T_n(3). Both (k+1)^-s and (2k+1)^-s are such moment
sequences for real s >= 1 (substitute x = e^-t, resp. x = e^-2t, in the
Gamma integral), so the error bound is unconditional and goes straight
into the ball radius. zeta(s) is recovered from the alternating eta
series via zeta = eta / (1 - 2^(1-s)).

The summatory accumulation is exact per term on a fixed 2^-P grid
(floor division), with one ulp charged to the radius per nonzero term
and a single conversion to a ball at the end, so the radius stays
proportional to the term count instead of compounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from . import ball as bl
from .ball import PrecisionContext, RealBall
from .dirichlet import DirichletCharacter, r_divisor_table
from .exact_arith import bernoulli, euler_number, factorial

__all__ = [
    "ClosedFormValue",
    "ScalingFit",
    "SummatoryRecord",
    "beta",
    "beta_odd_closed",
    "beta_scaling_experiment",
    "dedekind_product",
    "euler_product_exact",
    "euler_product_inv_zeta",
    "scaling_experiment",
    "summatory",
    "zeta",
    "zeta_even_closed",
]


def _chebyshev_degree(prec_bits: int) -> tuple[int, int]:
    # Smallest n with T_n(3) >= 2**prec_bits, plus T_n(3) itself.
    t0, t1, n = 1, 3, 1
    bound = 1 << prec_bits
    while t1 < bound:
        t0, t1 = t1, 6 * t1 - t0
        n += 1
    return n, t1


def _alternating_sum(term: Callable[[int], Fraction], prec_bits: int) -> tuple[Fraction, Fraction]:
    """Accelerated sum_{k>=0} (-1)^k term(k) with certified error bound.

    Requires term(k) to be the k-th moment of a positive measure on
    [0, 1]. Returns (estimate, bound) with |sum - estimate| <= bound.
    """
    n, d = _chebyshev_degree(prec_bits)
    b = Fraction(-1)
    c = Fraction(-d)
    acc = Fraction(0)
    for k in range(n):
        c = b - c
        acc += c * term(k)
        b = b * Fraction(2 * (k + n) * (k - n), (2 * k + 1) * (k + 1))
    return acc / d, term(0) / d


def _enclose(value: Fraction, err: Fraction, ctx: PrecisionContext) -> RealBall:
    return RealBall.from_interval(value - err, value + err, ctx)


@lru_cache(maxsize=None)
def _zeta_parts(s: int, prec_bits: int) -> tuple[Fraction, Fraction]:
    est, err = _alternating_sum(lambda k: Fraction(1, (k + 1) ** s), prec_bits)
    factor = Fraction(1 << (s - 1), (1 << (s - 1)) - 1)
    return est * factor, err * factor


@lru_cache(maxsize=None)
def _beta_parts(s: int, prec_bits: int) -> tuple[Fraction, Fraction]:
    return _alternating_sum(lambda k: Fraction(1, (2 * k + 1) ** s), prec_bits)


def zeta(s: int, ctx: PrecisionContext) -> RealBall:
    """Ball enclosing zeta(s) for integer s >= 2."""
    if s < 2:
        raise ValueError("zeta requires an integer s >= 2")
    est, err = _zeta_parts(s, ctx.prec + 4)
    return _enclose(est, err, ctx)


def beta(s: int, ctx: PrecisionContext, chi: DirichletCharacter | None = None) -> RealBall:
    """Ball enclosing L(s) = sum chi4(n) n^-s for integer s >= 1.

    Only the mod-4 character is supported; passing any other character
    raises, because the alternating form below is specific to it.
    """
    if s < 1:
        raise ValueError("beta requires an integer s >= 1")
    if chi is not None and (chi.modulus != 4 or tuple(chi.values) != (0, 1, 0, -1)):
        raise ValueError("only the mod-4 character is supported")
    est, err = _beta_parts(s, ctx.prec + 4)
    return _enclose(est, err, ctx)


def dedekind_product(s: int, ctx: PrecisionContext) -> RealBall:
    """Ball enclosing zeta(s) * L(s)."""
    return bl.mul(zeta(s, ctx), beta(s, ctx), ctx)


@dataclass(frozen=True)
class ClosedFormValue:
    """A rational multiple of an integer power of pi."""

    rational_part: Fraction
    pi_power: int

    def as_ball(self, ctx: PrecisionContext) -> RealBall:
        p = bl.pow_int(bl.pi(ctx), self.pi_power, ctx)
        return bl.mul(RealBall.from_fraction(self.rational_part, ctx), p, ctx)


def zeta_even_closed(n: int) -> ClosedFormValue:
    """zeta(2n) = (-1)^(n+1) (2 pi)^(2n) B_2n / (2 (2n)!) as rational * pi^2n."""
    if n < 1:
        raise ValueError("zeta_even_closed requires n >= 1")
    sign = 1 if n % 2 == 1 else -1
    rat = Fraction(sign * (1 << (2 * n)), 2 * factorial(2 * n)) * bernoulli(2 * n)
    return ClosedFormValue(rat, 2 * n)


def beta_odd_closed(n: int) -> ClosedFormValue:
    """L(2n+1) = (-1)^n pi^(2n+1) E_2n / (2^(2n+2) (2n)!) as rational * pi^(2n+1)."""
    if n < 0:
        raise ValueError("beta_odd_closed requires n >= 0")
    sign = 1 if n % 2 == 0 else -1
    rat = Fraction(sign * euler_number(2 * n), (1 << (2 * n + 2)) * factorial(2 * n))
    return ClosedFormValue(rat, 2 * n + 1)


# -- summatory experiments --------------------------------------------------


@dataclass(frozen=True)
class SummatoryRecord:
    """Partial sum of r(n)/n^s up to x, against the limit zeta(s) L(s)."""

    s: int
    x: int
    partial_sum: RealBall
    delta: RealBall
    scaled_delta: RealBall


@dataclass(frozen=True)
class ScalingFit:
    """Cutoff sweep of the summatory remainder, scaled by x^(s-1).

    c0_estimate is the scaled remainder at the largest cutoff; its
    certified sign is negative for the mod-4 character (the partial sums
    approach the product from below). mirror_scaled, when present,
    carries the swapped-roles remainders (L - S/zeta) * x^(s-1) and the
    c0 fields describe that mirror constant instead.
    """

    records: tuple[SummatoryRecord, ...]
    c0_estimate: RealBall
    c0_sign: int
    max_relative_spread: float
    mirror_scaled: tuple[RealBall, ...] | None = None


def _summatory_records(s: int, cutoffs: Sequence[int], ctx: PrecisionContext) -> list[SummatoryRecord]:
    if s < 2:
        raise ValueError("summatory requires an integer s >= 2")
    xs = sorted(set(int(x) for x in cutoffs))
    if not xs or xs[0] < 1:
        raise ValueError("cutoffs must be positive integers")
    top = xs[-1]
    table = r_divisor_table(top).tolist()
    shift = ctx.prec + max(top.bit_length(), 1) + 4
    limit_value = dedekind_product(s, ctx)
    acc = 0
    terms = 0
    records: list[SummatoryRecord] = []
    targets = iter(xs)
    nxt = next(targets)
    for n in range(1, top + 1):
        r = table[n]
        if r:
            acc += (r << shift) // n**s
            terms += 1
        if n == nxt:
            partial = RealBall.from_interval(
                Fraction(acc, 1 << shift), Fraction(acc + terms, 1 << shift), ctx
            )
            delta = bl.sub(partial, limit_value, ctx)
            scaled = bl.mul(delta, RealBall.from_int(n ** (s - 1)), ctx)
            records.append(SummatoryRecord(s, n, partial, delta, scaled))
            nxt = next(targets, None)
    return records


def summatory(s: int, x: int, ctx: PrecisionContext) -> SummatoryRecord:
    """Exact-per-term partial sum of r(n)/n^s for n <= x, as a ball record."""
    return _summatory_records(s, [x], ctx)[0]


def _sign_of(ball_value: RealBall) -> int:
    cmp = bl.compare_to_rational(ball_value, 0)
    if cmp is bl.Comparison.CERTAINLY_LESS:
        return -1
    if cmp is bl.Comparison.CERTAINLY_GREATER:
        return 1
    return 0


def _spread(values: Sequence[Fraction]) -> float:
    worst = 0.0
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            a, b = values[i], values[j]
            denom = max(abs(a), abs(b))
            if denom == 0:
                continue
            worst = max(worst, float(abs(a - b) / denom))
    return worst


def scaling_experiment(s: int, cutoffs: Sequence[int], ctx: PrecisionContext) -> ScalingFit:
    """Scaled remainders (S(s,x) - zeta L) * x^(s-1) across cutoffs."""
    records = _summatory_records(s, cutoffs, ctx)
    scaled = [rec.scaled_delta for rec in records]
    return ScalingFit(
        records=tuple(records),
        c0_estimate=scaled[-1],
        c0_sign=_sign_of(scaled[-1]),
        max_relative_spread=_spread([v.midpoint() for v in scaled]),
    )


def beta_scaling_experiment(s: int, cutoffs: Sequence[int], ctx: PrecisionContext) -> ScalingFit:
    """Same sweep with the roles of zeta and L exchanged.

    The records are identical (same underlying sum); the fitted constant
    is taken from (L(s) - S(s,x)/zeta(s)) * x^(s-1).
    """
    records = _summatory_records(s, cutoffs, ctx)
    z = zeta(s, ctx)
    lb = beta(s, ctx)
    mirror = []
    for rec in records:
        m_delta = bl.sub(lb, bl.div(rec.partial_sum, z, ctx), ctx)
        mirror.append(bl.mul(m_delta, RealBall.from_int(rec.x ** (s - 1)), ctx))
    return ScalingFit(
        records=tuple(records),
        c0_estimate=mirror[-1],
        c0_sign=_sign_of(mirror[-1]),
        max_relative_spread=_spread([v.midpoint() for v in mirror]),
        mirror_scaled=tuple(mirror),
    )


# -- Euler product -----------------------------------------------------------


def _primes_upto(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(limit**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, flag in enumerate(sieve) if flag]


def euler_product_exact(s: int, prime_limit: int) -> Fraction:
    """The finite product of (1 - p^-s) over primes p <= prime_limit."""
    if s < 2:
        raise ValueError("euler_product_exact requires s >= 2")
    value = Fraction(1)
    for p in _primes_upto(prime_limit):
        ps = p**s
        value *= Fraction(ps - 1, ps)
    return value


def euler_product_inv_zeta(s: int, prime_limit: int, ctx: PrecisionContext) -> RealBall:
    """Ball enclosing the finite Euler product for 1/zeta(s)."""
    return RealBall.from_fraction(euler_product_exact(s, prime_limit), ctx)
