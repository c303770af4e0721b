"""Command-line front end: point evaluation, theorem check suites, the
identity audit, figure-data CSV emission, and limit diagnostics.

Exit codes: 0 success / all checks passed, 1 a check produced a
counterexample, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

from mpmath import mpf

from . import verify
from .errors import CapacityError, ConvergenceError, DomainError
from .polydg import (
    PolyDoubleArg,
    psi2_cached,
    psi2_didouble,
    psi2_eval,
)
from .verify import FParams, GParams, Grid, HankelParams, SubAddParams

CSV_DIGITS = 17


def _fmt(v) -> str:
    """Locale-independent float rendering at 17 significant digits."""
    return format(float(v), f".{CSV_DIGITS}g")


def _write_csv(path, header, rows):
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _grid_from(args, lo, hi, count, spacing) -> Grid:
    return Grid(
        lo=args.grid_lo if args.grid_lo is not None else lo,
        hi=args.grid_hi if args.grid_hi is not None else hi,
        count=args.grid_count if args.grid_count is not None else count,
        spacing=args.grid_spacing if args.grid_spacing is not None else spacing,
    )


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------


def run_eval(args) -> int:
    if args.psi2:
        result = psi2_didouble(mpf(args.x))
    else:
        if args.n is None:
            raise DomainError("eval requires --n (or --psi2)")
        result = psi2_eval(PolyDoubleArg(args.n, mpf(args.x)), method=args.method)
    if args.format == "json":
        _emit(
            json.dumps(
                {
                    "value": float(result.value),
                    "error": result.error,
                    "method": result.method,
                }
            ),
            args.out,
        )
    else:
        _emit(
            f"value={_fmt(result.value)} error={result.error:.3e} "
            f"method={result.method}",
            args.out,
        )
    return 0


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------


def _run_single_check(args):
    cid = args.id
    if cid == "cm":
        n = args.n if args.n is not None else 3
        grid = _grid_from(args, 0.05, 50.0, 60, "log")
        return verify.check_cm(n, args.depth if args.depth is not None else 5, grid)
    if cid == "turan":
        n = args.n if args.n is not None else 2
        return verify.check_turan(n, _grid_from(args, 0.05, 4.0, 60, "linear"))
    if cid == "ratio-bounds":
        n = args.n if args.n is not None else 4
        return verify.check_ratio_bounds(n, _grid_from(args, 0.05, 1e4, 60, "log"))
    if cid == "F-cm":
        n = args.n if args.n is not None else 3
        omega = args.omega if args.omega is not None else (n - 2) / (n - 1)
        depth = args.depth if args.depth is not None else 4
        return verify.check_F_cm(
            FParams(n=n, omega=omega, derivative_depth=depth),
            _grid_from(args, 0.05, 50.0, 30, "log"),
        )
    if cid == "lemma-I1":
        n = args.n if args.n is not None else 3
        return verify.check_lemma_I1(
            n, _grid_from(args, 1.01, 1.99, 20, "linear"), tol=args.tol
        )
    if cid == "subadditivity":
        n = args.n if args.n is not None else 2
        return verify.check_subadditivity(
            SubAddParams(
                n=n,
                r=args.r_order if args.r_order is not None else 1,
                m=args.m if args.m is not None else 2.0,
                samples=args.samples,
                seed=args.seed,
            )
        )
    if cid == "G-convexity":
        n = args.n if args.n is not None else 3
        r = args.r if args.r is not None else 1.0
        return verify.check_G_convexity(
            GParams(n=n, r=r), _grid_from(args, 0.2, 10.0, 30, "log")
        )
    if cid == "hankel":
        n = args.n if args.n is not None else 2
        return verify.check_hankel_cm(
            HankelParams(
                n=n,
                j=args.j if args.j is not None else 1,
                m=args.m_order if args.m_order is not None else 1,
            ),
            args.depth if args.depth is not None else 1,
            _grid_from(args, 0.2, 10.0, 30, "log"),
        )
    if cid == "cauchy-schwarz":
        n = args.n if args.n is not None else 3
        return verify.check_cauchy_schwarz(n, _grid_from(args, 0.1, 20.0, 40, "log"))
    raise DomainError(f"unknown check id {cid!r}")


def _suite_all(args):
    """Default verification suite: one representative run of every check."""
    reports = [
        verify.check_cm(3, 5, Grid(0.05, 50.0, 40, "log")),
        verify.check_turan(2, Grid(0.05, 4.0, 40, "linear")),
        verify.check_ratio_bounds(4, Grid(0.05, 1e4, 40, "log")),
        verify.check_F_cm(FParams(3, 0.25, 4), Grid(0.05, 50.0, 20, "log")),
        verify.check_F_cm(FParams(3, 0.75, 4), Grid(0.05, 50.0, 20, "log")),
        verify.check_lemma_I1(3, Grid(1.01, 1.99, 12, "linear"), tol=1e-9),
        verify.check_lemma_I1(4, Grid(1.01, 1.99, 12, "linear"), tol=1e-9),
        verify.check_subadditivity(SubAddParams(2, 1, 2.0, 80, args.seed)),
        verify.check_subadditivity(SubAddParams(2, 0, 2.0, 80, args.seed)),
        verify.check_G_convexity(GParams(3, 1.0), Grid(0.2, 10.0, 20, "log")),
        verify.check_G_convexity(GParams(3, -0.2), Grid(0.2, 10.0, 20, "log")),
        verify.check_G_convexity(GParams(3, -0.6), Grid(0.2, 10.0, 20, "log")),
        verify.check_hankel_cm(HankelParams(2, 1, 2), 1, Grid(0.2, 10.0, 20, "log")),
        verify.check_hankel_cm(HankelParams(3, 2, 1), 1, Grid(0.2, 10.0, 20, "log")),
        verify.check_cauchy_schwarz(3, Grid(0.1, 20.0, 30, "log")),
    ]
    return reports


def run_check(args) -> int:
    if args.id:
        reports = [_run_single_check(args)]
    elif args.suite == "all":
        reports = _suite_all(args)
    else:
        raise DomainError(f"unknown suite {args.suite!r}; expected 'all'")

    if args.format == "json":
        payload = [r.to_dict() for r in reports]
        _emit(json.dumps(payload if len(payload) > 1 else payload[0]), args.out)
    else:
        lines = []
        for r in reports:
            tag = "PASS" if r.passed else "FAIL"
            lines.append(
                f"[{tag}] {r.check_id} params={r.params} "
                f"witnesses={len(r.witnesses)} "
                f"counterexamples={len(r.counterexamples)}"
            )
            for c in r.counterexamples[:5]:
                lines.append(f"    counterexample: {c}")
            if r.summary:
                lines.append(f"    summary: {r.summary}")
        _emit("\n".join(lines), args.out)
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------------
# audit
# ---------------------------------------------------------------------------


def run_audit(args) -> int:
    entries = verify.audit_identities()
    if args.format == "json":
        payload = [
            {
                "identity_id": e.identity_id,
                "anchor": e.anchor,
                "status": e.status,
                "max_deviation": e.max_deviation,
                "note": e.note,
            }
            for e in entries
        ]
        _emit(json.dumps(payload), args.out)
    else:
        lines = [f"identity audit ({verify.DISCLAIMER})"]
        for e in entries:
            lines.append(
                f"{e.status:12s} {e.identity_id:34s} "
                f"max_deviation={e.max_deviation:.3e}  {e.note}"
            )
        confirmed = sum(1 for e in entries if e.status == "confirmed")
        lines.append(
            f"{confirmed} confirmed, {len(entries) - confirmed} discrepancies "
            "(discrepancies are findings, not failures)"
        )
        _emit("\n".join(lines), args.out)
    return 0


# ---------------------------------------------------------------------------
# figure
# ---------------------------------------------------------------------------


def _linear_points(lo, hi, count, open_left=False):
    if open_left:
        step = (hi - lo) / count
        return [mpf(lo) + (i + 1) * mpf(step) for i in range(count)]
    step = (hi - lo) / (count - 1)
    return [mpf(lo) + i * mpf(step) for i in range(count)]


def run_figure(args) -> int:
    fid = args.id
    out = args.out or f"figure{fid}.csv"
    if fid == 1:
        xs = _linear_points(0.05, 4.0, 400, open_left=True)
        header = ["x"] + [f"d{k}" for k in range(6)]
        rows = [
            [x] + [psi2_cached(3 + k, x).value for k in range(6)] for x in xs
        ]
    elif fid == 2:
        xs = _linear_points(0.05, 4.0, 400, open_left=True)
        header = ["x", "lhs", "rhs"]
        rows = [
            [
                x,
                psi2_cached(2, x + 1).value ** 2,
                psi2_cached(2, x).value * psi2_cached(2, x + 2).value,
            ]
            for x in xs
        ]
    elif fid == 3:
        grid = Grid(1.0, 40000.0, 200, "log")
        header = ["x", "x_psi2_2"]
        rows = [[x, x * psi2_cached(2, x).value] for x in grid.points()]
    elif fid == 4:
        xs = _linear_points(1.01, 1.99, 100)
        header = ["a", "I1_n3", "I1_n4"]
        rows = [
            [a, verify.lemma_I1_value(3, a).value, verify.lemma_I1_value(4, a).value]
            for a in xs
        ]
    elif fid in (5, 6):
        omega = mpf(1) / 4 if fid == 5 else mpf(3) / 4
        sign = 1 if fid == 5 else -1
        xs = _linear_points(0.05, 4.0, 400, open_left=True)
        header = ["x", "F" if fid == 5 else "negF"] + [f"d{k}" for k in range(1, 5)]
        rows = []
        for x in xs:
            row = [x]
            for k in range(5):
                val, _ = verify._f_derivative(3, omega, k, x)
                row.append(sign * val)
            rows.append(row)
    else:
        raise DomainError("figure id must be in 1..6")
    _write_csv(out, header, rows)
    print(f"wrote {out} ({len(rows)} rows)")
    return 0


# ---------------------------------------------------------------------------
# limit
# ---------------------------------------------------------------------------


def run_limit(args) -> int:
    """x^(n-1) psi2^(n)(x) at x = x_max against its limit (-1)^(n-1) (n-2)!."""
    import math

    n = args.n if args.n is not None else 2
    if n < 2:
        raise DomainError("limit requires n >= 2")
    x = mpf(args.x_max)
    value = x ** (n - 1) * psi2_cached(n, x).value
    limit = (-1) ** (n - 1) * math.factorial(n - 2)
    payload = {
        "n": n,
        "x_max": float(x),
        "scaled_value": float(value),
        "limit": float(limit),
        "deviation": abs(float(value) - limit),
    }
    if args.format == "json":
        _emit(json.dumps(payload), args.out)
    else:
        _emit(
            f"x^(n-1) psi2^({n})(x) at x={_fmt(x)}: {_fmt(value)} "
            f"(limit {_fmt(limit)}, deviation {payload['deviation']:.3e})",
            args.out,
        )
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polydg",
        description="Poly-double gamma evaluation, theorem checks, identity audit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("human", "json")):
        p.add_argument("--tol", type=float, default=1e-10)
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", default=None)
        p.add_argument("--seed", type=int, default=0)

    p_eval = sub.add_parser("eval", help="evaluate psi2^(n)(x) or psi2(x)")
    p_eval.add_argument("--n", type=int, default=None)
    p_eval.add_argument("--psi2", action="store_true",
                        help="evaluate the di-double gamma psi2(x)")
    p_eval.add_argument("--x", type=float, required=True)
    p_eval.add_argument(
        "--method",
        choices=("auto", "series", "polygamma", "integral", "asymptotic"),
        default="auto",
    )
    common(p_eval)
    p_eval.set_defaults(func=run_eval)

    p_check = sub.add_parser("check", help="run theorem checks")
    p_check.add_argument("--suite", default="all")
    p_check.add_argument("--id", default=None)
    p_check.add_argument("--n", type=int, default=None)
    p_check.add_argument("--depth", type=int, default=None)
    p_check.add_argument("--omega", type=float, default=None)
    p_check.add_argument("--r", type=float, default=None,
                         help="exponent r for G-convexity")
    p_check.add_argument("--r-order", type=int, default=None,
                         help="order offset r for subadditivity")
    p_check.add_argument("--m", type=float, default=None,
                         help="domain bound m for subadditivity")
    p_check.add_argument("--j", type=int, default=None, help="Hankel stride")
    p_check.add_argument("--m-order", type=int, default=None,
                         help="Hankel matrix order parameter m")
    p_check.add_argument("--samples", type=int, default=200)
    p_check.add_argument("--grid-lo", type=float, default=None)
    p_check.add_argument("--grid-hi", type=float, default=None)
    p_check.add_argument("--grid-count", type=int, default=None)
    p_check.add_argument("--grid-spacing", choices=("linear", "log"), default=None)
    common(p_check)
    p_check.set_defaults(func=run_check)

    p_audit = sub.add_parser("audit", help="audit printed identities")
    common(p_audit)
    p_audit.set_defaults(func=run_audit)

    p_fig = sub.add_parser("figure", help="emit figure data as CSV")
    p_fig.add_argument("--id", type=int, required=True, choices=range(1, 7))
    common(p_fig, formats=("csv",))
    p_fig.set_defaults(func=run_figure)

    p_lim = sub.add_parser("limit", help="scaled large-x limit diagnostic")
    p_lim.add_argument("--n", type=int, default=None)
    p_lim.add_argument("--x-max", type=float, default=1e4)
    common(p_lim)
    p_lim.set_defaults(func=run_limit)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (DomainError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(f"usage: see `polydg {args.command} --help`", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"error: {exc} (best={exc.best}, err={exc.error_estimate})",
              file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
