"""The ten release-gate checks, each returning a pass/fail/indeterminate
result with a short detail string and its wall-clock cost.

Every check is self-contained and certified: expected values come from
closed forms, exact arithmetic, or rigorous tail bounds computed here,
never from floating-point guesses. A check that cannot decide at the
working precision reports indeterminate rather than guessing.
"""

from __future__ import annotations

import io
import json
import random
import time
from contextlib import redirect_stdout
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable, Sequence

import numpy as np

from . import ball as bl
from .approx_seq import combined_sequence, fixed_row_sandwich, product_upper_bound_scan
from .ball import PrecisionContext, RealBall, Verdict
from .diophantine import cf_expand, convergents, dirichlet_check, rationality_lower_bound_check
from .dirichlet import r_divisor_table, r_lattice_table
from .lseries import (
    beta,
    beta_odd_closed,
    euler_product_exact,
    scaling_experiment,
    summatory,
    zeta,
    zeta_even_closed,
)

__all__ = ["CriterionResult", "run", "run_all"]


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    status: str
    detail: str
    elapsed_s: float


def _ctx(bits: int) -> PrecisionContext:
    return PrecisionContext(bits)


def _catalan_digits(bits: int) -> tuple[str, str]:
    from . import cli

    buf = io.StringIO()
    with redirect_stdout(buf):
        rc = cli.main(
            ["const", "--kind", "beta", "--s", "2", "--digits", "12",
             "--precision-bits", str(bits)]
        )
    rec = json.loads(buf.getvalue().strip().splitlines()[0])
    value = rec.get("value")
    radius_ok = beta(2, _ctx(bits)).radius() < Fraction(1, 10**12)
    if rc == 0 and value == "0.915965594177" and radius_ok:
        return "pass", f"value={value}, radius<1e-12"
    return "fail", f"rc={rc}, value={value!r}, radius_ok={radius_ok}"


def _lattice_divisor_identity(bits: int) -> tuple[str, str]:
    limit = 10**4
    div = r_divisor_table(limit)
    lat = r_lattice_table(limit)
    if np.array_equal(lat[1:], 4 * div[1:]):
        return "pass", f"r_lattice(n) = 4 r_divisor(n) exact for n <= {limit}"
    bad = int(np.nonzero(lat[1:] != 4 * div[1:])[0][0]) + 1
    return "fail", f"first mismatch at n={bad}"


def _closed_form_cross_check(bits: int) -> tuple[str, str]:
    ctx = _ctx(bits)
    bound = Fraction(1, 10**45)
    worst = Fraction(0)
    worst_low = Fraction(0)
    for n in range(1, 6):
        diff = bl.sub(zeta(2 * n, ctx), zeta_even_closed(n).as_ball(ctx), ctx)
        worst = max(worst, diff.mag_upper())
        worst_low = max(worst_low, diff.mag_lower())
    for n in range(0, 5):
        diff = bl.sub(beta(2 * n + 1, ctx), beta_odd_closed(n).as_ball(ctx), ctx)
        worst = max(worst, diff.mag_upper())
        worst_low = max(worst_low, diff.mag_lower())
    if worst < bound:
        return "pass", f"max certified |diff| = {float(worst):.2e} < 1e-45"
    if worst_low >= bound:
        return "fail", f"certified |diff| >= {float(worst_low):.2e}"
    return "indeterminate", f"|diff| upper {float(worst):.2e} not below 1e-45"


def _divisor_pair_tail_bound(s: int, x: int) -> Fraction:
    """Exact upper bound on sum over pairs ab > x of (ab)^-s.

    Split by min(a, b) <= sqrt(x): twice the a <= sqrt(x) strip, plus
    the square where both factors exceed sqrt(x). Each tail uses
    sum_{b > y} b^-s <= y^(1-s)/(s-1), with y = x/a - 1 <= floor(x/a)
    for the strip and y = floor(sqrt(x)) for the square.
    """
    if s < 2:
        raise ValueError("tail bound needs s >= 2")
    sq = isqrt(x)
    strip = Fraction(0)
    for a in range(1, sq + 1):
        y = Fraction(x, a) - 1
        strip += Fraction(1, a**s) * (y ** (1 - s) / (s - 1))
    corner = (Fraction(sq) ** (1 - s) / (s - 1)) ** 2
    return 2 * strip + corner


def _summatory_tail_bound(bits: int) -> tuple[str, str]:
    ctx = _ctx(bits)
    x = 10**5
    margins = []
    for s in (2, 3, 4, 5):
        rec = summatory(s, x, ctx)
        bound = _divisor_pair_tail_bound(s, x)
        observed = rec.delta.mag_lower()
        if observed > bound:
            return "fail", f"s={s}: |delta| >= {float(observed):.2e} exceeds tail bound {float(bound):.2e}"
        margins.append(float(observed / bound) if bound else 0.0)
    return "pass", "|delta| within tail bound for s=2..5; ratios " + ", ".join(
        f"{m:.2f}" for m in margins
    )


def _scaled_remainder_stability(bits: int) -> tuple[str, str]:
    ctx = _ctx(bits)
    cutoffs = [10**3, 10**4, 10**5]
    fit3 = scaling_experiment(3, cutoffs, ctx)
    pi_mid = bl.pi(ctx).midpoint()
    t3 = pi_mid / 8
    v3 = fit3.c0_estimate.midpoint()
    rel3 = abs(v3 + t3) / t3
    fit2 = scaling_experiment(2, cutoffs, ctx)
    t2 = pi_mid / 4
    v2 = fit2.c0_estimate.midpoint()
    rel2 = abs(v2 + t2) / t2
    ok = (
        fit3.max_relative_spread <= 0.10
        and rel3 <= Fraction(5, 100)
        and rel2 <= Fraction(10, 100)
    )
    detail = (
        f"s=3 spread {fit3.max_relative_spread:.4f}, final vs -pi/8 off {float(rel3):.4f}; "
        f"s=2 final vs -pi/4 off {float(rel2):.4f}"
    )
    return ("pass" if ok else "fail"), detail


def _convergent_quality(bits: int) -> tuple[str, str]:
    ctx = _ctx(bits)
    targets = {
        "pi": bl.pi(ctx),
        "zeta3": zeta(3, ctx),
        "catalan": beta(2, ctx),
        "inv_beta3": bl.recip(beta(3, ctx), ctx),
    }
    total = 0
    indeterminate = 0
    for name, ball_x in targets.items():
        exp = cf_expand(ball_x, max_terms=24)
        convs = convergents(exp)
        prev = None
        for conv in convs:
            total += 1
            verdict = dirichlet_check(ball_x, conv)
            if verdict is Verdict.FALSE:
                return "fail", f"{name}: convergent {conv.p}/{conv.q} violates 1/q^2 bound"
            if verdict is Verdict.INDETERMINATE:
                indeterminate += 1
            if prev is None:
                det_ok = conv.q == 1
            else:
                det_ok = conv.p * prev.q - prev.p * conv.q == (-1) ** (conv.index - 1)
            if not det_ok:
                return "fail", f"{name}: determinant identity fails at index {conv.index}"
            prev = conv
    if indeterminate:
        return "indeterminate", f"{indeterminate}/{total} convergents undecidable at {bits} bits"
    return "pass", f"{total} convergents certified across 4 targets"


def _combined_grid_audit(bits: int) -> tuple[str, str]:
    ctx = _ctx(bits)
    depth = 8
    table = combined_sequence(3, depth, depth, ctx, c4=1)
    diag = table.diagonal()
    if len(diag) < depth:
        return "fail", f"only {len(diag)} diagonal entries available"
    for prev, curr in zip(diag, diag[1:]):
        if not curr.err.upper() < prev.err.lower():
            return "fail", f"diagonal err not certified decreasing at m=n={curr.m}"
    if not all(e.identity_exact for e in table.entries):
        return "fail", "algebraic identity failed on some entry"
    not_positive = [e for e in table.entries if e.err_positive is not Verdict.TRUE]
    if not_positive:
        e = not_positive[0]
        status = "indeterminate" if e.err_positive is Verdict.INDETERMINATE else "fail"
        return status, f"nonvanishing not certified at (m,n)=({e.m},{e.n})"
    scan = product_upper_bound_scan(3, depth, ctx)
    sandwich = fixed_row_sandwich(table, 2, scan.c2, ctx)
    if sandwich.crossover_index is None:
        return "fail", "no crossover within the scanned range"
    if not sandwich.crossover_matches_prediction:
        return "fail", "crossover index disagrees with the integer prediction"
    return "pass", (
        f"{len(table.entries)} entries; diagonal decreasing; crossover at n="
        f"{sandwich.crossover_index} matches prediction"
    )


def _euler_product_gap(bits: int) -> tuple[str, str]:
    ctx = _ctx(bits)
    ep = euler_product_exact(2, 10**4)
    inv_zeta2 = bl.recip(bl.pow_int(bl.pi(ctx), 2, ctx), ctx)
    target = bl.mul(RealBall.from_int(6), inv_zeta2, ctx)
    diff = bl.sub(RealBall.from_fraction(ep, ctx), target, ctx)
    gap = diff.mag_upper()
    if gap < Fraction(1, 10**4):
        return "pass", f"|product - 6/pi^2| <= {float(gap):.2e} < 1e-4"
    if diff.mag_lower() >= Fraction(1, 10**4):
        return "fail", f"gap certified >= {float(diff.mag_lower()):.2e}"
    return "indeterminate", f"gap upper bound {float(gap):.2e}"


def _inclusion_regression(bits: int) -> tuple[str, str]:
    rng = random.Random(617)
    ctx_lo = _ctx(bits)
    ctx_hi = _ctx(2 * bits)
    cap = Fraction(2) ** 64
    violations = 0
    for _ in range(1000):
        start = Fraction(rng.randint(-999, 999), rng.randint(1, 999))
        lo = RealBall.from_fraction(start, ctx_lo)
        hi = RealBall.from_fraction(start, ctx_hi)
        for _ in range(rng.randint(3, 8)):
            op = rng.randrange(8)
            if op in (0, 1, 2):
                c = Fraction(rng.randint(-99, 99), rng.randint(1, 99))
                fn = (bl.add, bl.sub, bl.mul)[op]
                lo = fn(lo, RealBall.from_fraction(c, ctx_lo), ctx_lo)
                hi = fn(hi, RealBall.from_fraction(c, ctx_hi), ctx_hi)
            elif op == 3:
                if lo.mag_upper() < cap:
                    lo = bl.mul(lo, lo, ctx_lo)
                    hi = bl.mul(hi, hi, ctx_hi)
            elif op == 4:
                lo = bl.add(lo, bl.pi(ctx_lo), ctx_lo)
                hi = bl.add(hi, bl.pi(ctx_hi), ctx_hi)
            elif op == 5:
                if lo.mag_upper() < cap:
                    lo = bl.pow_int(lo, 3, ctx_lo)
                    hi = bl.pow_int(hi, 3, ctx_hi)
            elif op == 6:
                lo = bl.absolute(lo)
                hi = bl.absolute(hi)
            else:
                if not lo.contains_zero() and not hi.contains_zero():
                    lo = bl.recip(lo, ctx_lo)
                    hi = bl.recip(hi, ctx_hi)
        pad = (lo.mag_upper() + 1) / (Fraction(2) ** ctx_lo.prec)
        if not (lo.lower() - pad <= hi.lower() and hi.upper() <= lo.upper() + pad):
            violations += 1
    if violations:
        return "fail", f"{violations}/1000 sequences violate inclusion"
    return "pass", "1000 randomized op sequences, zero inclusion violations"


def _rational_lower_bound_sweep(bits: int) -> tuple[str, str]:
    del bits
    checks = 0
    for x in (Fraction(22, 7), Fraction(355, 113)):
        for q in range(1, 101):
            base = (x.numerator * q) // x.denominator
            for p in range(base - q, base + q + 2):
                if q * x.numerator == p * x.denominator:
                    continue
                checks += 1
                if not rationality_lower_bound_check(x, p, q):
                    return "fail", f"violation at x={x}, p={p}, q={q}"
    return "pass", f"{checks} pairs checked, no violation of 1/(Bq)"


_Check = Callable[[int], tuple[str, str]]

_REGISTRY: tuple[tuple[int, str, _Check, float | None], ...] = (
    (1, "catalan_digits", _catalan_digits, 1.0),
    (2, "lattice_divisor_identity", _lattice_divisor_identity, 30.0),
    (3, "closed_form_cross_check", _closed_form_cross_check, 10.0),
    (4, "summatory_tail_bound", _summatory_tail_bound, 120.0),
    (5, "scaled_remainder_stability", _scaled_remainder_stability, None),
    (6, "convergent_quality", _convergent_quality, None),
    (7, "combined_grid_audit", _combined_grid_audit, None),
    (8, "euler_product_gap", _euler_product_gap, None),
    (9, "inclusion_regression", _inclusion_regression, None),
    (10, "rational_lower_bound_sweep", _rational_lower_bound_sweep, None),
)


def run(numbers: Sequence[int] | None = None, precision_bits: int = 256) -> list[CriterionResult]:
    """Run the selected criteria (all by default) at the given precision."""
    known = {number for number, _, _, _ in _REGISTRY}
    if numbers is not None:
        unknown = set(numbers) - known
        if unknown:
            raise ValueError(f"unknown criteria: {sorted(unknown)}")
    results: list[CriterionResult] = []
    for number, name, fn, limit in _REGISTRY:
        if numbers is not None and number not in numbers:
            continue
        t0 = time.perf_counter()
        try:
            status, detail = fn(precision_bits)
        except Exception as exc:
            status, detail = "fail", f"exception: {exc!r}"
        elapsed = time.perf_counter() - t0
        if limit is not None and status == "pass" and elapsed > limit:
            status = "fail"
            detail += f"; exceeded {limit:.0f}s budget ({elapsed:.1f}s)"
        results.append(CriterionResult(number, name, status, detail, elapsed))
    return results


def run_all(precision_bits: int = 256) -> list[CriterionResult]:
    return run(None, precision_bits=precision_bits)
