"""Continued fractions and rational-approximation certificates."""

import random
from fractions import Fraction

import pytest

from zetalab import (
    Convergent,
    PrecisionContext,
    RealBall,
    Termination,
    Verdict,
    ball,
    cf_expand,
    convergents,
    dirichlet_check,
    irrationality_scan,
    mu_estimate,
    rationality_lower_bound_check,
)

CTX = PrecisionContext()


def test_exact_rational_expansion_terminates():
    cf = cf_expand(Fraction(355, 113))
    assert cf.quotients == (3, 7, 16)
    assert cf.termination is Termination.EXACT


def test_ball_input_stops_at_integer_boundary():
    # The remainder after [3, 7] is exactly 1/16; a ball around the
    # rational cannot certify the next floor.
    b = RealBall.from_fraction(Fraction(355, 113), CTX)
    cf = cf_expand(b)
    assert cf.quotients == (3, 7)
    assert cf.termination is Termination.PRECISION_EXHAUSTED


def test_pi_expansion_prefix():
    cf = cf_expand(ball.pi(CTX), max_terms=5)
    assert cf.quotients == (3, 7, 15, 1, 292)
    assert cf.termination is Termination.MAX_TERMS
    full = cf_expand(ball.pi(CTX))
    assert full.quotients[:5] == (3, 7, 15, 1, 292)
    assert full.termination is Termination.MAX_TERMS
    assert len(full.quotients) == 24


def test_reexpansion_at_double_precision_agrees():
    coarse = cf_expand(ball.pi(CTX)).quotients
    fine = cf_expand(ball.pi(CTX.doubled())).quotients
    assert fine[: len(coarse)] == coarse


def fold_back(quotients: list[int]) -> Fraction:
    value = Fraction(quotients[-1])
    for a in reversed(quotients[:-1]):
        value = a + 1 / value
    return value


@pytest.mark.parametrize("seed", [4, 5, 6])
def test_convergents_match_backward_folding(seed):
    rng = random.Random(seed)
    for _ in range(50):
        quotients = [rng.randint(0, 9)] + [rng.randint(1, 9) for _ in range(rng.randint(1, 10))]
        convs = convergents(quotients)
        for k in range(len(quotients)):
            assert convs[k].value() == fold_back(quotients[: k + 1])


def test_convergent_determinant_identity():
    convs = convergents(cf_expand(ball.pi(CTX)))
    for prev, curr in zip(convs, convs[1:]):
        det = curr.p * prev.q - prev.p * curr.q
        assert det == (-1) ** (curr.index - 1)


def test_convergents_alternate_around_target():
    x = Fraction(103993, 33102)
    convs = convergents(cf_expand(x))
    for c in convs[:-1]:
        if c.index % 2 == 0:
            assert c.value() < x
        else:
            assert c.value() > x
    assert convs[-1].value() == x


def test_small_denominator_conventions():
    convs = convergents([0, 10, 10, 10])
    assert [(c.p, c.q) for c in convs] == [(0, 1), (1, 10), (10, 101), (101, 1020)]


def test_dirichlet_check_verdicts():
    convs = convergents(cf_expand(ball.pi(CTX)))
    for c in convs[:8]:
        assert dirichlet_check(ball.pi(CTX), c) is Verdict.TRUE
    # distance exactly 1/q^2 fails the strict inequality
    assert dirichlet_check(Fraction(3, 4), Convergent(1, 1, 2)) is Verdict.FALSE
    wide = RealBall.from_interval(Fraction(1, 2), Fraction(5, 6), CTX)
    assert dirichlet_check(wide, Convergent(1, 1, 2)) is Verdict.INDETERMINATE


def test_rationality_lower_bound_theorem_holds():
    assert rationality_lower_bound_check(Fraction(22, 7), 3, 1)
    rng = random.Random(7)
    for _ in range(500):
        x = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
        p = rng.randint(-999, 999)
        q = rng.randint(1, 999)
        if Fraction(p, q) == x:
            continue
        assert rationality_lower_bound_check(x, p, q)


def test_rationality_lower_bound_rejects_equality():
    with pytest.raises(ValueError):
        rationality_lower_bound_check(Fraction(22, 7), 44, 14)


def test_mu_estimate_frozen_head():
    convs = convergents([0, 10, 10, 10])
    est = mu_estimate(convs)
    assert [i for i, _ in est] == [1, 2]
    assert est[0][1] == pytest.approx(3.00432, abs=1e-4)
    assert est[1][1] == pytest.approx(2.50105, abs=1e-4)


def test_irrationality_scan_on_pi():
    x = ball.pi(CTX)
    convs = convergents(cf_expand(x))
    report = irrationality_scan(x, convs, delta=2.0)
    assert report.indeterminate == 0
    assert report.witnessed >= 1
    by_index = {e.index: e for e in report.entries}
    # |pi - 22/7| = 7^(-e) gives e near 3.4292
    assert by_index[1].e_low == pytest.approx(3.4292, abs=5e-3)
    assert by_index[1].e_low <= by_index[1].e_high


def test_irrationality_scan_excludes_exact_matches():
    x = Fraction(355, 113)
    convs = convergents(cf_expand(x))
    report = irrationality_scan(x, convs, delta=0.5)
    assert report.indeterminate == 1
    assert all(e.q != 113 for e in report.entries)


def test_round_trip_random_rationals():
    rng = random.Random(11)
    for _ in range(500):
        x = Fraction(rng.randint(-9999, 9999), rng.randint(1, 9999))
        cf = cf_expand(x, max_terms=64)
        assert cf.termination is Termination.EXACT
        assert convergents(cf)[-1].value() == x
