"""Ball arithmetic: enclosure under every operation, certified comparisons."""

import random
from fractions import Fraction

import pytest

from zetalab import (
    Comparison,
    PrecisionContext,
    RealBall,
    ZeroStraddleError,
    ball,
)

CTX = PrecisionContext()
SMALL = PrecisionContext(working_bits=64, guard_bits=16)


def test_exact_constructions():
    x = RealBall.from_int(7)
    assert x.is_exact
    assert x.midpoint() == 7
    half = RealBall.from_fraction(Fraction(1, 2), CTX)
    assert half.is_exact
    assert half.radius() == 0


def test_nondyadic_fraction_is_enclosed():
    third = RealBall.from_fraction(Fraction(1, 3), CTX)
    assert not third.is_exact
    assert third.contains_rational(Fraction(1, 3))
    assert third.radius() < Fraction(1, 2**250)


def test_from_interval_contains_both_endpoints():
    lo, hi = Fraction(2, 7), Fraction(3, 7)
    b = RealBall.from_interval(lo, hi, CTX)
    assert b.lower() <= lo and hi <= b.upper()


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_field_ops_enclose_exact_rationals(seed):
    rng = random.Random(seed)
    for _ in range(200):
        fa = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
        fb = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
        a = RealBall.from_fraction(fa, SMALL)
        b = RealBall.from_fraction(fb, SMALL)
        assert ball.add(a, b, SMALL).contains_rational(fa + fb)
        assert ball.sub(a, b, SMALL).contains_rational(fa - fb)
        assert ball.mul(a, b, SMALL).contains_rational(fa * fb)
        if fb != 0 and not b.contains_zero():
            assert ball.div(a, b, SMALL).contains_rational(fa / fb)


def test_recip_of_zero_straddle_raises():
    b = RealBall.from_interval(Fraction(-1, 10), Fraction(1, 10), CTX)
    assert b.contains_zero()
    with pytest.raises(ZeroStraddleError):
        ball.recip(b, CTX)
    with pytest.raises(ZeroStraddleError):
        ball.div(RealBall.from_int(1), b, CTX)


def test_compare_to_rational_three_outcomes():
    third = RealBall.from_fraction(Fraction(1, 3), CTX)
    assert ball.compare_to_rational(third, Fraction(1, 2)) is Comparison.CERTAINLY_LESS
    assert ball.compare_to_rational(third, Fraction(1, 4)) is Comparison.CERTAINLY_GREATER
    wide = RealBall.from_interval(Fraction(0), Fraction(1), CTX)
    assert ball.compare_to_rational(wide, Fraction(1, 3)) is Comparison.CONTAINS


def machin_interval(terms: int) -> tuple[Fraction, Fraction]:
    """Two-sided pi enclosure from arctan Taylor partial sums.

    Alternating series: truncation error is bounded by the first
    omitted term, in the direction of that term.
    """

    def atan_inv(k: int) -> tuple[Fraction, Fraction]:
        acc = Fraction(0)
        for j in range(terms):
            acc += Fraction((-1) ** j, (2 * j + 1) * k ** (2 * j + 1))
        tail = Fraction(1, (2 * terms + 1) * k ** (2 * terms + 1))
        return acc - tail, acc + tail

    lo5, hi5 = atan_inv(5)
    lo239, hi239 = atan_inv(239)
    return 16 * lo5 - 4 * hi239, 16 * hi5 - 4 * lo239


def test_pi_against_machin_oracle():
    # 55 terms give an oracle interval a few hundred times wider than
    # the 256-bit ball, so the whole ball must land inside it.
    p = ball.pi(CTX)
    lo, hi = machin_interval(55)
    assert lo <= p.lower() and p.upper() <= hi


def test_pi_radius_contract_and_refinement():
    p = ball.pi(CTX)
    assert p.radius() <= Fraction(1, 2 ** (CTX.working_bits - CTX.guard_bits))
    finer = ball.pi(CTX.doubled())
    assert ball.encloses(p, finer)
    assert finer.radius() < p.radius()


def test_pow_int_identities():
    b = RealBall.from_fraction(Fraction(3, 7), CTX)
    cube = ball.pow_int(b, 3, CTX)
    assert cube.contains_rational(Fraction(27, 343))
    assert ball.pow_int(b, 0, CTX).is_exact
    assert ball.pow_int(b, 0, CTX).midpoint() == 1
    inv = ball.pow_int(b, -2, CTX)
    assert inv.contains_rational(Fraction(49, 9))


def test_absolute_and_negation():
    b = RealBall.from_fraction(Fraction(-2, 3), CTX)
    assert ball.absolute(b).contains_rational(Fraction(2, 3))
    assert ball.neg(b).contains_rational(Fraction(2, 3))
    wide = RealBall.from_interval(Fraction(-1, 4), Fraction(1, 2), CTX)
    a = ball.absolute(wide)
    assert a.lower() <= 0 and a.upper() >= Fraction(1, 2)


def test_decimal_rendering():
    third = RealBall.from_fraction(Fraction(1, 3), CTX)
    assert third.decimal(10) == "0.3333333333"
    assert third.decimal_exponent() == 0
    with pytest.raises(ValueError):
        RealBall.from_int(0).decimal_exponent()


def test_precision_context_validation():
    with pytest.raises(ValueError):
        PrecisionContext(working_bits=0)
    doubled = CTX.doubled()
    assert doubled.working_bits == 2 * CTX.working_bits
    assert CTX.prec == CTX.working_bits + CTX.guard_bits


def test_low_precision_result_covers_high_precision_one():
    # Same expression at two precisions: the coarse ball must contain
    # the fine one up to the coarse representation pad.
    rng = random.Random(99)

    def run(ctx: PrecisionContext, f: Fraction, g: Fraction) -> RealBall:
        x = RealBall.from_fraction(f, ctx)
        y = RealBall.from_fraction(g, ctx)
        return ball.add(ball.mul(x, y, ctx), ball.pi(ctx), ctx)

    for _ in range(100):
        f = Fraction(rng.randint(-50, 50), rng.randint(1, 50))
        g = Fraction(rng.randint(1, 99), rng.randint(1, 99))
        lo = run(SMALL, f, g)
        hi = run(CTX, f, g)
        pad = (lo.mag_upper() + 1) / 2**SMALL.prec
        assert lo.lower() - pad <= hi.lower()
        assert hi.upper() <= lo.upper() + pad
