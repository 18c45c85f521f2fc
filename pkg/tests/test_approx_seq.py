"""Combined approximation grids, product scans, sandwich experiments."""

from fractions import Fraction

import pytest

from zetalab import (
    PrecisionContext,
    Verdict,
    beta_mirror,
    combined_sequence,
    fixed_row_sandwich,
    product_upper_bound_scan,
    rational_hypothesis_experiment,
)

CTX = PrecisionContext()


@pytest.fixture(scope="module")
def table():
    return combined_sequence(3, 8, 8, CTX)


@pytest.fixture(scope="module")
def scan():
    return product_upper_bound_scan(3, 8, CTX)


def test_first_entry_is_the_trivial_combination(table):
    e = table.entries[0]
    assert (e.m, e.n) == (0, 0)
    assert (e.a, e.b, e.p, e.q) == (1, 1, 1, 1)
    assert e.r == 2 and e.s_den == 1
    assert float(e.err.midpoint()) == pytest.approx(0.797943, rel=1e-4)


def test_every_entry_passes_its_exact_audit(table):
    assert len(table.entries) == 64
    for e in table.entries:
        assert e.identity_exact
        assert e.err_positive is Verdict.TRUE
        assert e.s_den == e.b * e.b * e.q
        assert e.r == e.a * e.b * e.p + e.c4 * e.p


def test_band_certified_for_all_stream_a_rows(table):
    assert len(table.band) == 8
    assert all(v is Verdict.TRUE for v in table.band)


def test_stream_heads_frozen(table):
    assert [(c.p, c.q) for c in table.stream_a[:4]] == [(1, 1), (7, 6), (99, 85), (601, 516)]
    assert [(c.p, c.q) for c in table.stream_b[:4]] == [(1, 1), (32, 31), (129, 125), (161, 156)]


def test_diagonal_errors_certified_decreasing(table):
    diag = table.diagonal()
    assert len(diag) == 8
    for prev, curr in zip(diag, diag[1:]):
        assert curr.err.upper() < prev.err.lower()


def test_row_and_diagonal_selectors(table):
    row = table.row(2)
    assert [e.n for e in row] == list(range(8))
    assert all(e.m == 2 for e in row)
    assert all(e.m == e.n for e in table.diagonal())


def test_product_scan_constants(scan):
    assert len(scan.rows) == 8
    assert all(r.bound_ok for r in scan.rows)
    assert all(r.positive is Verdict.TRUE for r in scan.rows)
    assert float(scan.c2) == pytest.approx(0.8936, rel=1e-3)
    # c2 is the max of the certified d q^2 envelopes, so it is attained
    assert any(r.dq2_upper == scan.c2 for r in scan.rows)


def test_product_scan_finite_rows():
    scan = product_upper_bound_scan(3, 4, CTX, x_cutoffs=(50, 500))
    assert [row.x for row in scan.finite_rows[:2]] == [50, 50]
    assert {row.x for row in scan.finite_rows} == {50, 500}
    assert len(scan.finite_rows) == 8


def test_rational_hypothesis_crossover_matches_prediction(scan):
    rep = rational_hypothesis_experiment(3, Fraction(6, 5), 8, CTX)
    assert rep.c3 == Fraction(1, 5)
    assert rep.a == 1 and rep.b == 1
    assert rep.crossover_index == 1
    assert rep.crossover_matches_prediction
    assert all(r.hypothesis_bound_ok for r in rep.rows)
    # every row below the crossover keeps lower <= upper, none above does
    for r in rep.rows:
        if r.n < rep.crossover_index:
            assert r.lower <= r.upper
        else:
            assert r.lower > r.upper


def test_crossover_index_monotone_in_denominator():
    indexes = []
    for hyp in (Fraction(6, 5), Fraction(61, 50), Fraction(601, 500)):
        rep = rational_hypothesis_experiment(3, hyp, 8, CTX)
        assert rep.crossover_matches_prediction
        indexes.append(rep.crossover_index)
    assert indexes == sorted(indexes)
    assert indexes[0] < indexes[-1]


def test_fixed_row_sandwich_crossover(table, scan):
    rep = fixed_row_sandwich(table, 2, scan.c2, CTX)
    assert rep.m0 == 2 and rep.b == 85
    assert float(rep.c5) == pytest.approx(56.359, rel=1e-3)
    assert rep.crossover_index == 2
    assert rep.crossover_matches_prediction
    assert rep.indeterminate_count == 0


def test_beta_mirror_streams_and_target():
    t = beta_mirror(2, 3, 3, CTX)
    assert t.mirror
    assert [(c.p, c.q) for c in t.stream_a] == [(1, 1), (2, 1), (3, 2)]
    assert [(c.p, c.q) for c in t.stream_b] == [(1, 1), (1, 2), (2, 3)]
    assert float(t.target.midpoint()) == pytest.approx(0.9159655, rel=1e-6)
    e = t.entries[0]
    assert (e.r, e.s_den) == (2, 1)
    assert float(e.err.midpoint()) == pytest.approx(1.084034, rel=1e-4)


def test_mirror_requires_even_s():
    with pytest.raises(ValueError):
        beta_mirror(3, 2, 2, CTX)
