"""Combined rational approximation sequences to zeta(s) built from two
convergent streams, and the inequality experiments around them.

Stream A approximates the product Z = zeta(s) L(s) by CF convergents
a_m/b_m; stream B approximates 1/L(s) by convergents p_n/q_n. The
combined rational r_mn/s_mn with r_mn = a_m b_m p_n + c4 p_n and
s_mn = b_m^2 q_n satisfies r_mn/s_mn = (a_m/b_m + c4/b_m^2)(p_n/q_n)
exactly and approximates zeta(s). The mirror construction swaps the
roles (stream B from 1/zeta, target L(s)) for even s.

Constants c2, c3, c5 are fitted from the data as exact rationals and
reported; the experiments certify each claimed inequality per entry and
locate the crossover index where a fitted lower bound overtakes the
fitted upper bound. Every verdict is a certified ball comparison;
failures are data, not errors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import ball as bl
from .ball import Comparison, PrecisionContext, RealBall, Verdict
from .diophantine import Convergent, Termination, cf_expand, convergents
from .lseries import beta, dedekind_product, summatory, zeta

__all__ = [
    "CombinedEntry",
    "CombinedTable",
    "FiniteProductRow",
    "HypothesisReport",
    "HypothesisRow",
    "ProductScanReport",
    "ProductScanRow",
    "SandwichReport",
    "SandwichRow",
    "beta_mirror",
    "combined_sequence",
    "fixed_row_sandwich",
    "product_upper_bound_scan",
    "rational_hypothesis_experiment",
]


def _dist_ball(x: RealBall, fr: Fraction, ctx: PrecisionContext) -> RealBall:
    """Ball enclosing |x - fr| over every point of x."""
    lo = x.lower() - fr
    hi = x.upper() - fr
    if lo >= 0:
        alo, ahi = lo, hi
    elif hi <= 0:
        alo, ahi = -hi, -lo
    else:
        alo, ahi = Fraction(0), max(-lo, hi)
    return RealBall.from_interval(alo, ahi, ctx)


def _verdict_ge(x: RealBall, bound: Fraction) -> Verdict:
    # Certified x >= bound (closed inequality).
    if x.lower() >= bound:
        return Verdict.TRUE
    if x.upper() < bound:
        return Verdict.FALSE
    return Verdict.INDETERMINATE


def _verdict_lt(x: RealBall, bound: Fraction) -> Verdict:
    # Certified x < bound (strict inequality).
    if x.upper() < bound:
        return Verdict.TRUE
    if x.lower() >= bound:
        return Verdict.FALSE
    return Verdict.INDETERMINATE


def _verdict_positive(x: RealBall) -> Verdict:
    cmp = bl.compare_to_rational(x, 0)
    if cmp is Comparison.CERTAINLY_GREATER:
        return Verdict.TRUE
    if cmp is Comparison.CERTAINLY_LESS:
        return Verdict.FALSE
    return Verdict.INDETERMINATE


def _stream(x: RealBall, depth: int, skip_zero: bool) -> tuple[list[Convergent], bool]:
    """First `depth` convergents of x, optionally dropping leading p = 0.

    Returns (convergents, truncated). truncated is True when precision
    ran out before `depth` usable convergents existed.
    """
    want = depth + 1 if skip_zero else depth
    exp = cf_expand(x, max_terms=want)
    convs = [c for c in convergents(exp) if not (skip_zero and c.p == 0)]
    convs = convs[:depth]
    truncated = len(convs) < depth and exp.termination is Termination.PRECISION_EXHAUSTED
    return convs, truncated


@dataclass(frozen=True)
class CombinedEntry:
    """One combined approximation r/s_den to the target, with its audit."""

    m: int
    n: int
    a: int
    b: int
    p: int
    q: int
    c4: int
    r: int
    s_den: int
    err: RealBall
    err_positive: Verdict
    identity_exact: bool
    chain: Verdict


@dataclass(frozen=True)
class CombinedTable:
    """Grid of combined approximations over two convergent streams.

    band[m] certifies |Z - a_m/b_m| < c4/b_m^2 for stream A. chain on an
    entry certifies that the combined rational sits at least as close to
    the target as the plain product step (p_n/q_n) Z does; its failures
    are honest data.
    """

    s: int
    c4: int
    mirror: bool
    target: RealBall
    product: RealBall
    stream_a: tuple[Convergent, ...]
    stream_b: tuple[Convergent, ...]
    band: tuple[Verdict, ...]
    entries: tuple[CombinedEntry, ...]
    truncated: bool

    def diagonal(self) -> list[CombinedEntry]:
        return [e for e in self.entries if e.m == e.n]

    def row(self, m: int) -> list[CombinedEntry]:
        return [e for e in self.entries if e.m == m]


def combined_sequence(
    s: int,
    depth_m: int,
    depth_n: int,
    ctx: PrecisionContext,
    c4: int = 1,
    mirror: bool = False,
) -> CombinedTable:
    """Build the full (m, n) grid of combined approximations.

    mirror=False targets zeta(s) with stream B from 1/L(s); mirror=True
    (even s only) targets L(s) with stream B from 1/zeta(s).
    """
    if depth_m < 1 or depth_n < 1:
        raise ValueError("depths must be at least 1")
    if c4 < 1:
        raise ValueError("c4 must be a positive integer")
    if mirror and s % 2 != 0:
        raise ValueError("the mirror construction requires even s")
    if s < 2:
        raise ValueError("combined_sequence requires s >= 2")
    product = dedekind_product(s, ctx)
    if mirror:
        target = beta(s, ctx)
        inv = bl.recip(zeta(s, ctx), ctx)
    else:
        target = zeta(s, ctx)
        inv = bl.recip(beta(s, ctx), ctx)
    stream_a, trunc_a = _stream(product, depth_m, skip_zero=False)
    stream_b, trunc_b = _stream(inv, depth_n, skip_zero=True)

    band = tuple(
        _verdict_lt(_dist_ball(product, cv.value(), ctx), Fraction(c4, cv.q**2))
        for cv in stream_a
    )
    # D_n = |target - (p_n/q_n) Z|, shared across rows.
    dist_n: list[RealBall] = []
    for cv in stream_b:
        step = bl.mul(RealBall.from_fraction(cv.value(), ctx), product, ctx)
        dist_n.append(bl.absolute(bl.sub(target, step, ctx)))

    entries: list[CombinedEntry] = []
    for m, av in enumerate(stream_a):
        a, b = av.p, av.q
        for n, pv in enumerate(stream_b):
            p, q = pv.p, pv.q
            r = a * b * p + c4 * p
            s_den = b * b * q
            approx = Fraction(r, s_den)
            err = _dist_ball(target, approx, ctx)
            identity = approx == (Fraction(a, b) + Fraction(c4, b * b)) * Fraction(p, q)
            diff = bl.sub(dist_n[n], err, ctx)
            chain = _verdict_ge(diff, Fraction(0))
            entries.append(
                CombinedEntry(
                    m=m,
                    n=n,
                    a=a,
                    b=b,
                    p=p,
                    q=q,
                    c4=c4,
                    r=r,
                    s_den=s_den,
                    err=err,
                    err_positive=_verdict_positive(err),
                    identity_exact=identity,
                    chain=chain,
                )
            )
    return CombinedTable(
        s=s,
        c4=c4,
        mirror=mirror,
        target=target,
        product=product,
        stream_a=tuple(stream_a),
        stream_b=tuple(stream_b),
        band=band,
        entries=tuple(entries),
        truncated=trunc_a or trunc_b,
    )


def beta_mirror(s: int, depth_m: int, depth_n: int, ctx: PrecisionContext, c4: int = 1) -> CombinedTable:
    """Combined sequence with zeta and L exchanged; targets L(s), even s."""
    return combined_sequence(s, depth_m, depth_n, ctx, c4=c4, mirror=True)


# -- product upper bound scan ------------------------------------------------


@dataclass(frozen=True)
class ProductScanRow:
    n: int
    p: int
    q: int
    d: RealBall
    positive: Verdict
    dq2_upper: Fraction
    bound_ok: bool


@dataclass(frozen=True)
class FiniteProductRow:
    x: int
    n: int
    p: int
    q: int
    d: RealBall
    dq2_upper: Fraction


@dataclass(frozen=True)
class ProductScanReport:
    """Scan of D_n = |zeta(s) - (p_n/q_n) Z| with the fitted c2.

    c2 = max over rows of upper(D_n) q_n^2, an exact rational, so
    D_n < c2/q_n^2 holds by construction; bound_ok re-checks it row by
    row. finite_rows repeat the scan with a partial sum S(s, x) in
    place of Z.
    """

    s: int
    rows: tuple[ProductScanRow, ...]
    c2: Fraction
    finite_rows: tuple[FiniteProductRow, ...]
    truncated: bool


def product_upper_bound_scan(
    s: int,
    n_count: int,
    ctx: PrecisionContext,
    x_cutoffs: Sequence[int] = (),
    mirror: bool = False,
) -> ProductScanReport:
    if n_count < 1:
        raise ValueError("n_count must be at least 1")
    if s < 2:
        raise ValueError("product_upper_bound_scan requires s >= 2")
    if mirror and s % 2 != 0:
        raise ValueError("the mirror construction requires even s")
    product = dedekind_product(s, ctx)
    if mirror:
        target = beta(s, ctx)
        inv = bl.recip(zeta(s, ctx), ctx)
    else:
        target = zeta(s, ctx)
        inv = bl.recip(beta(s, ctx), ctx)
    stream, truncated = _stream(inv, n_count, skip_zero=True)

    dq2: list[Fraction] = []
    dists: list[RealBall] = []
    for cv in stream:
        step = bl.mul(RealBall.from_fraction(cv.value(), ctx), product, ctx)
        d = bl.absolute(bl.sub(target, step, ctx))
        dists.append(d)
        dq2.append(d.upper() * cv.q**2)
    c2 = max(dq2)
    rows = tuple(
        ProductScanRow(
            n=i,
            p=cv.p,
            q=cv.q,
            d=dists[i],
            positive=_verdict_positive(dists[i]),
            dq2_upper=dq2[i],
            bound_ok=dq2[i] <= c2,
        )
        for i, cv in enumerate(stream)
    )

    finite: list[FiniteProductRow] = []
    for x in x_cutoffs:
        partial = summatory(s, x, ctx).partial_sum
        for i, cv in enumerate(stream):
            step = bl.mul(RealBall.from_fraction(cv.value(), ctx), partial, ctx)
            d = bl.absolute(bl.sub(target, step, ctx))
            finite.append(
                FiniteProductRow(x=x, n=i, p=cv.p, q=cv.q, d=d, dq2_upper=d.upper() * cv.q**2)
            )
    return ProductScanReport(s=s, rows=rows, c2=c2, finite_rows=tuple(finite), truncated=truncated)


# -- rational hypothesis (case1) experiment ----------------------------------


@dataclass(frozen=True)
class HypothesisRow:
    n: int
    p: int
    q: int
    lower: Fraction
    upper: Fraction
    middle: RealBall
    lower_ok: Verdict
    upper_ok: Verdict
    hypothesis_bound_ok: bool


@dataclass(frozen=True)
class HypothesisReport:
    """Sandwich c3/(b q_n) <= |zeta(s) - (a/b)(p_n/q_n)| < c2/q_n^2 under
    the hypothesis that zeta(s) equals the supplied rational A/B.

    c3 = 1/B. The middle quantity uses the certified zeta(s) ball, so
    failing verdicts are the observable shadow of the contradiction:
    past the crossover index the two fitted bounds are incompatible.
    hypothesis_bound_ok is the exact lower-bound check with A/B itself
    in place of zeta(s); it holds for every row where the two rationals
    differ.
    """

    s: int
    hypothesis: Fraction
    m_index: int
    a: int
    b: int
    c2: Fraction
    c3: Fraction
    rows: tuple[HypothesisRow, ...]
    crossover_index: int | None
    predicted_threshold: Fraction
    crossover_matches_prediction: bool


def rational_hypothesis_experiment(
    s: int,
    hypothesis: Fraction,
    n_count: int,
    ctx: PrecisionContext,
    m_index: int = 0,
) -> HypothesisReport:
    scan = product_upper_bound_scan(s, n_count, ctx)
    c2 = scan.c2
    c3 = Fraction(1, hypothesis.denominator)
    product = dedekind_product(s, ctx)
    stream_a, _ = _stream(product, m_index + 1, skip_zero=False)
    if len(stream_a) <= m_index:
        raise ValueError("stream A exhausted before the requested row")
    av = stream_a[m_index]
    a, b = av.p, av.q
    target = zeta(s, ctx)

    rows: list[HypothesisRow] = []
    crossover: int | None = None
    for row in scan.rows:
        p, q = row.p, row.q
        lower = c3 / (b * q)
        upper = c2 / q**2
        approx = Fraction(a * p, b * q)
        middle = _dist_ball(target, approx, ctx)
        exact_diff = abs(hypothesis - approx)
        bound_ok = exact_diff >= Fraction(1, hypothesis.denominator * b * q) if exact_diff else True
        rows.append(
            HypothesisRow(
                n=row.n,
                p=p,
                q=q,
                lower=lower,
                upper=upper,
                middle=middle,
                lower_ok=_verdict_ge(middle, lower),
                upper_ok=_verdict_lt(middle, upper),
                hypothesis_bound_ok=bound_ok,
            )
        )
        if crossover is None and lower > upper:
            crossover = row.n
    threshold = c2 * b / c3
    predicted: int | None = None
    for row in scan.rows:
        if row.q > threshold:
            predicted = row.n
            break
    return HypothesisReport(
        s=s,
        hypothesis=hypothesis,
        m_index=m_index,
        a=a,
        b=b,
        c2=c2,
        c3=c3,
        rows=tuple(rows),
        crossover_index=crossover,
        predicted_threshold=threshold,
        crossover_matches_prediction=predicted == crossover,
    )


# -- fixed-row sandwich ------------------------------------------------------


@dataclass(frozen=True)
class SandwichRow:
    n: int
    p: int
    q: int
    lower: Fraction
    upper: Fraction
    err: RealBall
    lower_ok: Verdict
    upper_ok: Verdict


@dataclass(frozen=True)
class SandwichReport:
    """Sandwich c5/(b^2 q_n) <= |target - r/s| < c2/q_n^2 along one row m0.

    c5 is fitted as the minimum of lower(err) b^2 q_n over the row, so
    the lower bound holds by construction; the crossover is the first n
    with c5 q_n > c2 b^2, past which no value can satisfy both bounds.
    """

    s: int
    m0: int
    b: int
    c2: Fraction
    c5: Fraction
    rows: tuple[SandwichRow, ...]
    crossover_index: int | None
    predicted_threshold: Fraction
    crossover_matches_prediction: bool
    indeterminate_count: int


def fixed_row_sandwich(table: CombinedTable, m0: int, c2: Fraction, ctx: PrecisionContext) -> SandwichReport:
    row_entries = table.row(m0)
    if not row_entries:
        raise ValueError("table has no row with the requested m0")
    b = table.stream_a[m0].q
    fits = [e.err.lower() * b * b * e.q for e in row_entries]
    positive_fits = [f for f in fits if f > 0]
    if not positive_fits:
        raise ValueError("no entry in the row has a certified positive error")
    c5 = min(positive_fits)

    rows: list[SandwichRow] = []
    crossover: int | None = None
    indeterminate = 0
    for e in row_entries:
        lower = c5 / (b * b * e.q)
        upper = c2 / Fraction(e.q) ** 2
        lower_ok = _verdict_ge(e.err, lower)
        upper_ok = _verdict_lt(e.err, upper)
        if Verdict.INDETERMINATE in (lower_ok, upper_ok):
            indeterminate += 1
        rows.append(
            SandwichRow(
                n=e.n,
                p=e.p,
                q=e.q,
                lower=lower,
                upper=upper,
                err=e.err,
                lower_ok=lower_ok,
                upper_ok=upper_ok,
            )
        )
        if crossover is None and c5 * e.q > c2 * b * b:
            crossover = e.n
    threshold = c2 * b * b / c5
    predicted: int | None = None
    for e in row_entries:
        if e.q > threshold:
            predicted = e.n
            break
    return SandwichReport(
        s=table.s,
        m0=m0,
        b=b,
        c2=c2,
        c5=c5,
        rows=tuple(rows),
        crossover_index=crossover,
        predicted_threshold=threshold,
        crossover_matches_prediction=predicted == crossover,
        indeterminate_count=indeterminate,
    )
