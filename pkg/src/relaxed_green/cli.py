"""Command-line interface: ``eval``, ``profile``, ``verify`` and ``params``.

Data goes to stdout (or ``--out``), diagnostics to stderr. Exit codes:
0 success, 1 failing verification, 2 usage error, 3 inadmissible parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .constitutive import evaluate_fields
from .errors import ContractError, InadmissibleParameterError, RelaxedGreenError
from .material import check_admissible, load_params
from .models import LoadCase, ModelKind
from .profiles import QUANTITIES, ProfileSpec, fig5_table, fig7_table, fig8_table, profile_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INADMISSIBLE = 0, 1, 2, 3

KINEMATIC_COLUMNS = ("u1", "u2", "P11", "P12", "P21", "P22", "theta3")
GAUGE_COLUMNS = ("e11", "e12", "e21", "e22")


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ helpers

def _fmt(v):
    v = float(v)
    if math.isnan(v):
        return "nan"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return format(v, ".17g")


def _write_csv(columns, out):
    names = list(columns)
    rows = zip(*(np.asarray(columns[n], dtype=float).ravel() for n in names))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(names)
    for row in rows:
        w.writerow([_fmt(v) for v in row])
    _emit(buf.getvalue(), out)


def _emit(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _read_params(path):
    try:
        return load_params(path)
    except RelaxedGreenError as exc:
        # the file parsed but its moduli admit no derived constants
        raise InadmissibleParameterError(str(exc)) from exc
    except (OSError, ValueError, TypeError) as exc:
        raise UsageError(f"cannot read parameters from {path}: {exc}") from exc


def _params(path):
    p = _read_params(path)
    report = check_admissible(p)
    if not report.ok:
        raise InadmissibleParameterError("; ".join(report.failures()))
    return p


def _model(text):
    try:
        return ModelKind.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load(text):
    try:
        return LoadCase.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _length(p, normalize):
    if normalize == "ell2":
        if not math.isfinite(p.ell_2):
            raise UsageError("ell_2 is infinite for mu_c = 0; use --normalize lc or none")
        return p.ell_2
    if normalize == "lc":
        return p.L_c
    return 1.0


def field_scales(p, load, length, normalize):
    """Factors that make ``u``, ``P``/``theta3`` and ``e`` dimensionless.

    Force: ``u mu_M``, ``P mu_M L``. Couple: ``u mu_M L``, ``P mu_M L^2``.
    ``L`` is the normalization length; ``none`` leaves fields untouched.
    """
    if normalize == "none":
        return 1.0, 1.0
    mu = p.mu_M
    if LoadCase(load) is LoadCase.force:
        return mu, mu * length
    return mu * length, mu * length**2


def _check_pair(model, load):
    if model is ModelKind.GaugeDislocation and load is not LoadCase.couple:
        raise UsageError("GaugeDislocation is solved for the couple load only")


def _evaluate(p, model, load, x1, x2, direction):
    try:
        return evaluate_fields(p, model, load, x1, x2, direction)
    except ContractError as exc:
        raise UsageError(str(exc)) from None


# --------------------------------------------------------------- commands

def cmd_eval(args):
    p = _params(args.params)
    model, load = _model(args.model), _load(args.load)
    _check_pair(model, load)
    if args.nx < 2 or args.ny < 2:
        raise UsageError("nx and ny must be at least 2")
    (x0, x1_), (y0, y1) = args.x_range, args.y_range
    if not (x0 < x1_ and y0 < y1):
        raise UsageError("grid bounds must be ordered")
    L = _length(p, args.normalize)
    su, sp = field_scales(p, load, L, args.normalize)
    xs = np.linspace(x0, x1_, args.nx)
    ys = np.linspace(y0, y1, args.ny)
    gauge = model is ModelKind.GaugeDislocation
    names = GAUGE_COLUMNS if gauge else KINEMATIC_COLUMNS

    def row(y):
        X1, X2 = xs * L, np.full_like(xs, y * L)
        out = {n: np.full(xs.shape, np.nan) for n in names}
        ok = np.hypot(X1, X2) > 0
        if ok.any():
            f = _evaluate(p, model, load, X1[ok], X2[ok], args.direction)
            if not gauge:
                f["theta3"] = 0.5 * (f["P21"] - f["P12"])
            for n in names:
                out[n][ok] = f[n] * (su if n in ("u1", "u2") else sp)
        return out

    with ThreadPoolExecutor(max_workers=max(1, args.threads)) as pool:
        rows = list(pool.map(row, ys))
    cols = {"x1": np.tile(xs, len(ys)), "x2": np.repeat(ys, len(xs))}
    for n in names:
        cols[n] = np.concatenate([r[n] for r in rows])
    _write_csv(cols, args.out)
    return EXIT_OK


def _r_values(args, L):
    if args.r_values:
        try:
            r = [float(v) for v in args.r_values.split(",")]
        except ValueError:
            raise UsageError("--r-values must be comma-separated numbers") from None
    else:
        lo, hi, n = args.r_range
        r = list(np.linspace(float(lo), float(hi), int(n)))
    return tuple(v * L for v in r)


def cmd_profile(args):
    if args.figure:
        return _figure(args)
    p = _params(args.params)
    load = _load(args.load)
    models = [_model(m) for m in args.models.split(",")]
    for m in models:
        _check_pair(m, load)
    L = _length(p, args.normalize)
    try:
        spec = ProfileSpec(args.axis, _r_values(args, L), args.quantity)
    except ContractError as exc:
        raise UsageError(str(exc)) from None
    su, sp = field_scales(p, load, L, args.normalize)
    scale = su if args.quantity in ("u1", "u2", "norm_u") else sp
    if args.quantity.startswith(("sigma", "m")) or args.quantity.startswith("e"):
        scale = 1.0
    try:
        cols = profile_table(p, models, load, spec, scale=scale, length=L,
                             direction=args.direction)
    except ContractError as exc:
        raise UsageError(str(exc)) from None
    _write_csv(cols, args.out)
    return EXIT_OK


def _figure(args):
    fig = args.figure
    if fig == "5":
        _, u2, th = fig5_table()
        cols = {"r": u2["r"]}
        cols.update({f"u2_{k}": v for k, v in u2.items() if k != "r"})
        cols.update({f"theta3_{k}": v for k, v in th.items() if k != "r"})
    elif fig == "7":
        _, t = fig7_table()
        cols = {"r": t["r"]}
        cols.update({f"norm_u_{k}": v for k, v in t.items() if k != "r"})
    else:
        cols = None
        for g1 in (3.0, 10.0, 50.0):
            _, t = fig8_table(g1)
            if cols is None:
                cols = {"r": t["r"]}
            tag = f"g1={g1:g}"
            cols.update({f"{k}[{tag}]": v for k, v in t.items() if k != "r"})
    _write_csv(cols, args.out)
    return EXIT_OK


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.floating, float)):
        v = float(obj)
        return v if math.isfinite(v) else str(v)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    return obj


def cmd_verify(args):
    from .suites import DEFAULT_SUITES, SUITES, run_suites

    p = _params(args.params)
    names = args.suite or list(DEFAULT_SUITES)
    for n in names:
        if n not in SUITES:
            raise UsageError(f"unknown suite {n!r}; choose from {sorted(SUITES)}")
    records = run_suites(p, names, label=args.params)
    failing = [r for r in records if not r["pass"]]
    report = {"suites": names, "passed": not failing, "checks": records}
    _emit(json.dumps(_jsonable(report), indent=2) + "\n", args.out)
    for r in failing:
        print(f"FAIL {r['check']}: {r['result']}", file=sys.stderr)
    return EXIT_FAIL if failing else EXIT_OK


def cmd_params(args):
    p = _read_params(args.params)
    lines = ["quantity,value"]
    for k, v in {**p.raw(), **p.derived()}.items():
        lines.append(f"{k},{_fmt(v)}")
    report = check_admissible(p)
    for group, checks in (("positive_definite", report.positive_definite),
                          ("elliptic", report.elliptic)):
        for k, ok in checks.items():
            lines.append(f"{group}: {k},{'yes' if ok else 'no'}")
    lines.append(f"admissible,{'yes' if report.ok else 'no'}")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


# ------------------------------------------------------------------ parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser():
    parser = _Parser(prog="relaxed-green",
                     description="Fundamental solutions of the relaxed micromorphic family.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, *, model=True, load=True):
        sp.add_argument("--params", required=True, help="JSON parameter file")
        if model:
            sp.add_argument("--model", default="RelaxedMicromorphic")
        if load:
            sp.add_argument("--load", default="force", help="force or couple")
        sp.add_argument("--out", default=None, help="output path (default stdout)")

    ev = sub.add_parser("eval", help="fields on a rectangular grid (CSV)")
    common(ev)
    ev.add_argument("--x-range", nargs=2, type=float, default=(-2.0, 2.0), metavar=("MIN", "MAX"))
    ev.add_argument("--y-range", nargs=2, type=float, default=(-2.0, 2.0), metavar=("MIN", "MAX"))
    ev.add_argument("--nx", type=int, default=41)
    ev.add_argument("--ny", type=int, default=41)
    ev.add_argument("--direction", choices=("x1", "x2"), default="x2")
    ev.add_argument("--normalize", choices=("ell2", "lc", "none"), default="ell2")
    ev.add_argument("--threads", type=int, default=1)
    ev.set_defaults(func=cmd_eval)

    pr = sub.add_parser("profile", help="line profiles, one column per model (CSV)")
    pr.add_argument("--params", help="JSON parameter file (not needed with --figure)")
    pr.add_argument("--models", default="RelaxedMicromorphic", help="comma-separated models")
    pr.add_argument("--load", default="force")
    pr.add_argument("--out", default=None)
    pr.add_argument("--axis", choices=("x1+", "x2+", "radial"), default="x1+")
    pr.add_argument("--quantity", choices=QUANTITIES, default="u2")
    pr.add_argument("--r-values", default=None, help="comma-separated radii")
    pr.add_argument("--r-range", nargs=3, default=("0.2", "2", "91"), metavar=("LO", "HI", "N"))
    pr.add_argument("--direction", choices=("x1", "x2"), default="x2")
    pr.add_argument("--normalize", choices=("ell2", "lc", "none"), default="ell2")
    pr.add_argument("--threads", type=int, default=1)
    pr.add_argument("--figure", choices=("5", "7", "8"), default=None,
                    help="emit the data set of a figure with its own parameters")
    pr.set_defaults(func=cmd_profile)

    ve = sub.add_parser("verify", help="run verification suites (JSON report)")
    ve.add_argument("--params", required=True)
    ve.add_argument("--suite", action="append", default=None,
                    help="suite name; repeat to run several (default: all but figures)")
    ve.add_argument("--out", default=None)
    ve.add_argument("--threads", type=int, default=1)
    ve.set_defaults(func=cmd_verify)

    pa = sub.add_parser("params", help="derived scalars and admissibility")
    pa.add_argument("--params", required=True)
    pa.add_argument("--out", default=None)
    pa.set_defaults(func=cmd_params)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "profile" and not args.figure and not args.params:
        print("error: --params is required unless --figure is given", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InadmissibleParameterError as exc:
        print(f"inadmissible parameters: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except RelaxedGreenError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
