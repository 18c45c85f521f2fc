"""Command-line front end: every experiment as a reproducible run.

Output is a stream of records, one JSON object per line (or CSV with
--format csv), each carrying schema and kind fields. Balls are printed
as a truncated decimal value plus a certified _radius field; exact
rationals as "num/den" strings; verdicts as lowercase strings. Output
bytes depend only on the flags, never on wall time.

Exit codes: 0 all good, 1 a certified check failed, 2 indeterminate or
unusable input (a precision hint is printed when raising precision
could help).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import ball as bl
from .approx_seq import (
    CombinedTable,
    SandwichReport,
    combined_sequence,
    fixed_row_sandwich,
    product_upper_bound_scan,
    rational_hypothesis_experiment,
)
from .ball import PrecisionContext, RealBall, Verdict
from .diophantine import cf_expand, convergents, dirichlet_check
from .dirichlet import r_divisor_table, r_lattice_table
from .lseries import (
    beta,
    beta_scaling_experiment,
    dedekind_product,
    scaling_experiment,
    zeta,
)

SCHEMA = 1

_ENV_BITS = "ZETALAB_PRECISION_BITS"


def _env_default_bits() -> int | str:
    raw = os.environ.get(_ENV_BITS)
    if raw is None:
        return 256
    return raw


def _frac_str(fr: Fraction) -> str:
    return f"{fr.numerator}/{fr.denominator}"


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _parse_int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}") from exc
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _ball_fields(name: str, b: RealBall, digits: int) -> dict[str, str]:
    return {name: b.decimal(digits), f"{name}_radius": b.radius_decimal()}


def _record(kind: str, **fields: Any) -> dict[str, Any]:
    rec: dict[str, Any] = {"schema": SCHEMA, "kind": kind}
    rec.update(fields)
    return rec


def _emit(records: list[dict[str, Any]], fmt: str) -> None:
    if fmt == "json-lines":
        for rec in records:
            sys.stdout.write(json.dumps(rec, separators=(",", ":")) + "\n")
        return
    fieldnames: list[str] = []
    for rec in records:
        for key in rec:
            if key not in fieldnames:
                fieldnames.append(key)
    writer = csv.DictWriter(sys.stdout, fieldnames=fieldnames, restval="", lineterminator="\n")
    writer.writeheader()
    for rec in records:
        row = {}
        for key, value in rec.items():
            if value is True:
                row[key] = "true"
            elif value is False:
                row[key] = "false"
            elif value is None:
                row[key] = ""
            elif isinstance(value, list):
                row[key] = " ".join(str(v) for v in value)
            else:
                row[key] = value
        writer.writerow(row)


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


# -- subcommands -------------------------------------------------------------


def _cmd_const(args: argparse.Namespace) -> int:
    ctx = PrecisionContext(args.precision_bits)
    s = args.s
    if args.kind == "zeta":
        if s < 2:
            raise ValueError("zeta needs s >= 2")
        value = zeta(s, ctx)
    elif args.kind == "beta":
        if s < 1:
            raise ValueError("beta needs s >= 1")
        value = beta(s, ctx)
    else:
        if s < 2:
            raise ValueError("dedekind needs s >= 2")
        value = dedekind_product(s, ctx)
    digits = args.digits
    rec = _record(
        "const",
        name=args.kind,
        s=s,
        digits=digits,
        **_ball_fields("value", value, digits),
    )
    rad = value.radius()
    if rad != 0:
        p = value.decimal_exponent()
        if rad >= Fraction(10) ** (p - digits):
            rec["status"] = "indeterminate"
            _emit([rec], args.format)
            _warn(
                f"radius {value.radius_decimal()} too large for {digits} digits; "
                f"retry with --precision-bits {2 * ctx.working_bits}"
            )
            return 2
    _emit([rec], args.format)
    return 0


def _cmd_rn(args: argparse.Namespace) -> int:
    limit = args.max
    if limit < 1:
        raise ValueError("--max must be at least 1")
    div = r_divisor_table(limit)
    lat = r_lattice_table(limit)
    records = []
    mismatches = 0
    for n in range(1, limit + 1):
        rec = _record("rn", n=n, r_divisor=int(div[n]), r_lattice=int(lat[n]))
        if args.check_lattice:
            ok = int(lat[n]) == 4 * int(div[n])
            rec["jacobi_ok"] = ok
            if not ok:
                mismatches += 1
        records.append(rec)
    if args.check_lattice:
        records.append(_record("rn_summary", checked=limit, mismatches=mismatches))
    _emit(records, args.format)
    return 1 if mismatches else 0


def _cmd_lemma6(args: argparse.Namespace) -> int:
    ctx = PrecisionContext(args.precision_bits)
    if args.mirror:
        fit = beta_scaling_experiment(args.s, args.xs, ctx)
    else:
        fit = scaling_experiment(args.s, args.xs, ctx)
    digits = args.digits
    records = []
    for i, rec in enumerate(fit.records):
        fields = _record("scaling", s=rec.s, x=rec.x)
        fields.update(_ball_fields("partial_sum", rec.partial_sum, digits))
        fields.update(_ball_fields("delta", rec.delta, digits))
        fields.update(_ball_fields("scaled_delta", rec.scaled_delta, digits))
        if fit.mirror_scaled is not None:
            fields.update(_ball_fields("mirror_scaled", fit.mirror_scaled[i], digits))
        records.append(fields)
    summary = _record(
        "scaling_summary",
        s=args.s,
        mirror=bool(args.mirror),
        c0_sign=fit.c0_sign,
        max_relative_spread=f"{fit.max_relative_spread:.6e}",
        **_ball_fields("c0_estimate", fit.c0_estimate, digits),
    )
    records.append(summary)
    _emit(records, args.format)
    return 0


_CF_TARGETS = ("pi", "zeta", "beta", "inv-zeta", "inv-beta", "dedekind", "rational")


def _cf_target(args: argparse.Namespace, ctx: PrecisionContext):
    name = args.target
    if name == "rational":
        if args.value is None:
            raise ValueError("--target rational needs --value A/B")
        return args.value
    if name == "pi":
        return bl.pi(ctx)
    s = args.s
    if s is None:
        raise ValueError(f"--target {name} needs --s")
    if name == "zeta":
        return zeta(s, ctx)
    if name == "beta":
        return beta(s, ctx)
    if name == "inv-zeta":
        return bl.recip(zeta(s, ctx), ctx)
    if name == "inv-beta":
        return bl.recip(beta(s, ctx), ctx)
    return dedekind_product(s, ctx)


def _cmd_cf(args: argparse.Namespace) -> int:
    ctx = PrecisionContext(args.precision_bits)
    x = _cf_target(args, ctx)
    exp = cf_expand(x, max_terms=args.terms)
    convs = convergents(exp)
    records = [
        _record(
            "cf",
            target=args.target,
            s=args.s,
            terms=args.terms,
            quotients=list(exp.quotients),
            termination=exp.termination.value,
        )
    ]
    prev = None
    for conv in convs:
        if prev is None:
            det_ok = conv.q == 1
        else:
            det_ok = conv.p * prev.q - prev.p * conv.q == (-1) ** (conv.index - 1)
        records.append(
            _record(
                "convergent",
                index=conv.index,
                p=conv.p,
                q=conv.q,
                dirichlet_ok=dirichlet_check(x, conv).value,
                determinant_ok=det_ok,
            )
        )
        prev = conv
    _emit(records, args.format)
    return 0


def _combined_records(
    table: CombinedTable, sandwich: SandwichReport, digits: int, summary_kind: str
) -> list[dict[str, Any]]:
    records: list[dict[str, Any]] = []
    for i, cv in enumerate(table.stream_a):
        records.append(
            _record("stream_a", m=i, a=cv.p, b=cv.q, band_ok=table.band[i].value)
        )
    for i, cv in enumerate(table.stream_b):
        records.append(_record("stream_b", n=i, p=cv.p, q=cv.q))
    for e in table.entries:
        rec = _record(
            "entry",
            m=e.m,
            n=e.n,
            a=e.a,
            b=e.b,
            p=e.p,
            q=e.q,
            r=e.r,
            s_den=e.s_den,
            **_ball_fields("err", e.err, digits),
        )
        rec["err_positive"] = e.err_positive.value
        rec["identity_exact"] = e.identity_exact
        rec["chain"] = e.chain.value
        records.append(rec)
    for row in sandwich.rows:
        rec = _record(
            "sandwich",
            n=row.n,
            p=row.p,
            q=row.q,
            lower=_frac_str(row.lower),
            upper=_frac_str(row.upper),
            **_ball_fields("err", row.err, digits),
        )
        rec["lower_ok"] = row.lower_ok.value
        rec["upper_ok"] = row.upper_ok.value
        records.append(rec)
    records.append(
        _record(
            summary_kind,
            s=table.s,
            c4=table.c4,
            mirror=table.mirror,
            m0=sandwich.m0,
            b=sandwich.b,
            c2=_frac_str(sandwich.c2),
            c5=_frac_str(sandwich.c5),
            crossover_index=sandwich.crossover_index,
            predicted_threshold=_frac_str(sandwich.predicted_threshold),
            crossover_matches_prediction=sandwich.crossover_matches_prediction,
            indeterminate_count=sandwich.indeterminate_count,
            truncated=table.truncated,
        )
    )
    return records


def _run_combined(args: argparse.Namespace, mirror: bool, summary_kind: str) -> int:
    ctx = PrecisionContext(args.precision_bits)
    depth_m = args.depth_m or args.depth
    depth_n = args.depth_n or args.depth
    table = combined_sequence(args.s, depth_m, depth_n, ctx, c4=args.c4, mirror=mirror)
    if table.truncated:
        _warn("expansion exhausted before the requested depth; table truncated")
    scan = product_upper_bound_scan(args.s, len(table.stream_b), ctx, mirror=mirror)
    m0 = min(2, len(table.stream_a) - 1)
    sandwich = fixed_row_sandwich(table, m0, scan.c2, ctx)
    _emit(_combined_records(table, sandwich, args.digits, summary_kind), args.format)
    return 0


def _cmd_seq17(args: argparse.Namespace) -> int:
    return _run_combined(args, mirror=False, summary_kind="seq17_summary")


def _cmd_beta_mirror(args: argparse.Namespace) -> int:
    return _run_combined(args, mirror=True, summary_kind="beta_mirror_summary")


def _cmd_case1(args: argparse.Namespace) -> int:
    ctx = PrecisionContext(args.precision_bits)
    rep = rational_hypothesis_experiment(
        args.s, args.hypothesis, args.terms, ctx, m_index=args.m_index
    )
    digits = args.digits
    records = []
    for row in rep.rows:
        rec = _record(
            "case1",
            n=row.n,
            p=row.p,
            q=row.q,
            lower=_frac_str(row.lower),
            upper=_frac_str(row.upper),
            **_ball_fields("middle", row.middle, digits),
        )
        rec["lower_ok"] = row.lower_ok.value
        rec["upper_ok"] = row.upper_ok.value
        rec["hypothesis_bound_ok"] = row.hypothesis_bound_ok
        records.append(rec)
    records.append(
        _record(
            "case1_summary",
            s=rep.s,
            hypothesis=_frac_str(rep.hypothesis),
            m_index=rep.m_index,
            a=rep.a,
            b=rep.b,
            c2=_frac_str(rep.c2),
            c3=_frac_str(rep.c3),
            crossover_index=rep.crossover_index,
            predicted_threshold=_frac_str(rep.predicted_threshold),
            crossover_matches_prediction=rep.crossover_matches_prediction,
        )
    )
    _emit(records, args.format)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    from . import acceptance

    if args.suite == "all":
        numbers = None
    else:
        numbers = _parse_int_list(args.suite)
    results = acceptance.run(numbers, precision_bits=args.precision_bits)
    records = [
        _record(
            "criterion",
            number=res.number,
            name=res.name,
            status=res.status,
            detail=res.detail,
        )
        for res in results
    ]
    _emit(records, args.format)
    if any(res.status == "fail" for res in results):
        return 1
    if any(res.status == "indeterminate" for res in results):
        _warn("indeterminate criteria; retry with a higher --precision-bits")
        return 2
    return 0


# -- parser ------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--precision-bits",
        type=int,
        default=_env_default_bits(),
        help=f"working precision in bits (default 256; env {_ENV_BITS} overrides)",
    )
    common.add_argument(
        "--format",
        choices=("json-lines", "csv"),
        default="json-lines",
        help="output format (default json-lines)",
    )
    common.add_argument(
        "--digits",
        type=int,
        default=24,
        help="significant digits when printing ball midpoints (default 24)",
    )

    parser = argparse.ArgumentParser(
        prog="zetalab",
        description="Certified experiments around zeta(s) L(s) and rational approximation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("const", parents=[common], help="print a certified constant")
    p.add_argument("--kind", choices=("zeta", "beta", "dedekind"), required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=_cmd_const)

    p = sub.add_parser("rn", parents=[common], help="two-squares counting data r(n)")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--check-lattice", action="store_true")
    p.set_defaults(func=_cmd_rn)

    p = sub.add_parser("lemma6", parents=[common], help="summatory scaling experiment")
    p.add_argument("--s", type=int, default=3)
    p.add_argument("--xs", type=_parse_int_list, default=[1000, 10000, 100000])
    p.add_argument("--mirror", action="store_true")
    p.set_defaults(func=_cmd_lemma6)

    p = sub.add_parser("cf", parents=[common], help="certified continued fraction")
    p.add_argument("--target", choices=_CF_TARGETS, required=True)
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--value", type=_parse_fraction, default=None, help="A/B for --target rational")
    p.add_argument("--terms", type=int, default=24)
    p.set_defaults(func=_cmd_cf)

    p = sub.add_parser("seq17", parents=[common], help="combined approximation grid")
    p.add_argument("--s", type=int, default=3)
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--depth-m", type=int, default=None)
    p.add_argument("--depth-n", type=int, default=None)
    p.add_argument("--c4", type=int, default=1)
    p.set_defaults(func=_cmd_seq17)

    p = sub.add_parser("case1", parents=[common], help="rational-hypothesis sandwich")
    p.add_argument("--s", type=int, default=3)
    p.add_argument("--hypothesis", type=_parse_fraction, required=True)
    p.add_argument("--terms", type=int, default=8)
    p.add_argument("--m-index", type=int, default=0)
    p.set_defaults(func=_cmd_case1)

    p = sub.add_parser("beta-mirror", parents=[common], help="mirror grid targeting L(s)")
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--depth-m", type=int, default=None)
    p.add_argument("--depth-n", type=int, default=None)
    p.add_argument("--c4", type=int, default=1)
    p.set_defaults(func=_cmd_beta_mirror)

    p = sub.add_parser("verify", parents=[common], help="run the acceptance suite")
    p.add_argument("--suite", default="all", help='"all" or comma-separated criterion numbers')
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if isinstance(args.precision_bits, str):
            args.precision_bits = int(args.precision_bits)
    except ValueError:
        print(f"error: {_ENV_BITS} must be an integer", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
