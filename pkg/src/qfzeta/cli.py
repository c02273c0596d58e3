"""Command-line front end.

Subcommands: count, sweep, epstein, kappa, k0, verify-paper.
Exit codes: 0 success, 2 parse error, 3 domain/definiteness error,
4 resource budget exceeded, 5 verification failure.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .bounds import (
    BoundReport,
    k0_lower_bound,
    k0_lower_bound_auto,
    verify_reference,
)
from .counting import (
    DEFAULT_POINT_BUDGET,
    count,
    write_mean_curve_csv,
    write_sweep_csv,
)
from .epstein import potter_eval, zeta_q_series
from .errors import (
    BudgetError,
    DomainError,
    FormError,
    ParseError,
    VerificationError,
)
from .forms import form_constants, parse_form

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_BUDGET = 4
EXIT_VERIFY = 5


def _parse_complex(text: str) -> complex:
    cleaned = text.strip().replace(" ", "").replace("i", "j").replace("I", "j")
    try:
        return complex(cleaned)
    except ValueError:
        raise ParseError(f"cannot parse complex number {text!r}") from None


def _add_common(sub, *, form=True):
    if form:
        sub.add_argument("--form", required=True, help='form literal "a,b,c" (sqrt(k) allowed)')
    sub.add_argument("--workers", type=int, default=1, help="enumeration worker count")
    sub.add_argument(
        "--budget",
        type=int,
        default=DEFAULT_POINT_BUDGET,
        help="maximum lattice points per enumeration",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfzeta",
        description=(
            "Lattice point counts inside ellipses of a positive definite "
            "binary quadratic form, Epstein zeta evaluation, and the "
            "certified error-term lower bound pipeline."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("count", help="A, B, P, R at a single threshold")
    _add_common(p)
    p.add_argument("--x", type=float, required=True, help="threshold Q <= x")

    p = subs.add_parser("sweep", help="CSV sweep of (x,A,B,P,R), optional (Y,M) curve")
    _add_common(p)
    p.add_argument("--ymax", type=float, required=True, help="largest threshold")
    p.add_argument("--rows", type=int, default=100, help="number of data rows")
    p.add_argument("--log-step", action="store_true", help="geometric instead of linear spacing")
    p.add_argument("--out", required=True, help="output CSV path for the count sweep")
    p.add_argument("--mean-out", help="optional CSV path for the (Y, M) curve")
    p.add_argument("--no-timestamp", action="store_true", help="omit the timestamp header line")

    p = subs.add_parser("epstein", help="evaluate zeta_Q(s) with a certified enclosure")
    _add_common(p)
    p.add_argument("--s", required=True, help='complex s, e.g. "0.75+2i"')
    p.add_argument("--Z", type=float, default=1000.0, help="approximate-equation cutoff")
    p.add_argument("--series", action="store_true", help="also run the direct series (Re s > 1)")
    p.add_argument("--tol", type=float, default=1e-9, help="direct series tolerance")

    p = subs.add_parser("kappa", help="geometric constants of a form")
    _add_common(p)

    p = subs.add_parser("k0", help="lower bound for the mean |R| constant")
    _add_common(p)
    p.add_argument("--Z", type=float, default=1000.0, help="approximate-equation cutoff")
    p.add_argument("--zero-index", type=int, default=1, help="tabulated zero to use")
    p.add_argument("--auto", action="store_true", help="advance the zero until the margin is positive")
    p.add_argument("--csv", action="store_true", help="emit a CSV header and row instead of text")

    p = subs.add_parser("verify-paper", help="recompute the reference example and diff each value")
    _add_common(p, form=False)
    p.add_argument("--Z", type=float, default=1000.0, help="approximate-equation cutoff")

    return parser


def _cmd_count(args) -> int:
    form = parse_form(args.form)
    res = count(form, args.x, workers=args.workers, budget=args.budget)
    print(f"x = {res.x:.12g}")
    print(f"A = {res.a}")
    print(f"B = {res.b}")
    print(f"P = {res.p:.12g}")
    print(f"R = {res.r:.12g}")
    return EXIT_OK


def _cmd_sweep(args) -> int:
    form = parse_form(args.form)
    if args.rows < 1:
        raise DomainError(f"rows must be >= 1, got {args.rows}")
    if args.log_step:
        if args.ymax <= 1.0:
            raise DomainError("log-step sweep requires ymax > 1")
        xs = np.geomspace(1.0, args.ymax, args.rows)
    else:
        xs = np.linspace(args.ymax / args.rows, args.ymax, args.rows)
    stamp = not args.no_timestamp
    write_sweep_csv(
        form, xs, args.out, timestamp=stamp, workers=args.workers, budget=args.budget
    )
    print(f"wrote {args.rows} rows to {args.out}")
    if args.mean_out:
        ys = [x for x in xs if x >= 1.0]
        if not ys:
            raise DomainError("mean curve needs thresholds >= 1; increase ymax")
        write_mean_curve_csv(
            form, ys, args.mean_out, timestamp=stamp, workers=args.workers, budget=args.budget
        )
        print(f"wrote {len(ys)} rows to {args.mean_out}")
    return EXIT_OK


def _cmd_epstein(args) -> int:
    form = parse_form(args.form)
    s = _parse_complex(args.s)
    enc = potter_eval(form, args.Z, s, workers=args.workers, budget=args.budget)
    print(f"s          = {enc.s:.12g}")
    print(f"Z          = {enc.cutoff:.12g}")
    print(f"F1         = {enc.f1.real:.12g} + {enc.f1.imag:.12g}i")
    print(f"|F1|       = {abs(enc.f1):.12g}")
    print(f"F2 bound   = {enc.f2_bound:.12g}")
    print(f"radius     = {enc.radius:.12g}")
    print(f"certified  = {enc.certified}")
    if args.series:
        value = zeta_q_series(form, s, args.tol, budget=args.budget)
        print(f"series     = {value.real:.12g} + {value.imag:.12g}i")
        print(f"|series-F1|= {abs(value - enc.f1):.12g}")
    return EXIT_OK


def _cmd_kappa(args) -> int:
    form = parse_form(args.form)
    consts = form_constants(form)
    print(f"a          = {form.a:.12g}")
    print(f"b          = {form.b:.12g}")
    print(f"c          = {form.c:.12g}")
    print(f"D          = {form.disc:.12g}")
    print(f"kappa      = {consts.kappa:.12g}")
    print(f"lambda1    = {consts.lambda1:.12g}")
    print(f"main_all   = {consts.main_all:.12g}")
    print(f"main_prim  = {consts.main_prim:.12g}")
    return EXIT_OK


def _print_report(report: BoundReport, as_csv: bool) -> None:
    if as_csv:
        print(BoundReport.CSV_HEADER)
        print(report.csv_row())
    else:
        print(report.as_text())


def _cmd_k0(args) -> int:
    form = parse_form(args.form)
    if args.auto:
        report = k0_lower_bound_auto(
            form, args.Z, start_index=args.zero_index, workers=args.workers, budget=args.budget
        )
    else:
        report = k0_lower_bound(
            form, args.zero_index, args.Z, workers=args.workers, budget=args.budget
        )
    _print_report(report, args.csv)
    return EXIT_OK


def _cmd_verify_paper(args) -> int:
    checks = verify_reference(args.Z, workers=args.workers, budget=args.budget)
    width = max(len(c.name) for c in checks)
    ok = True
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"{c.name:<{width}}  computed={c.computed:.12g}  target: {c.target}  {status}")
        ok &= c.passed
    print(f"overall: {'PASS' if ok else 'FAIL'} ({sum(c.passed for c in checks)}/{len(checks)})")
    return EXIT_OK if ok else EXIT_VERIFY


_COMMANDS = {
    "count": _cmd_count,
    "sweep": _cmd_sweep,
    "epstein": _cmd_epstein,
    "kappa": _cmd_kappa,
    "k0": _cmd_k0,
    "verify-paper": _cmd_verify_paper,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (FormError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
