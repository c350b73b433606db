"""Batch front end: verify identities over parameter grids, dump partition
tables, run asymptotic comparisons, and cross-check the kernel against its
contour-integral oracle.  Reports stream as line-delimited JSON or CSV in
stable parameter order; two runs with the same configuration produce
byte-identical output.

Numeric flags accept the symbolic tokens pi, 2pi, e, and rational powers
pi^(p/q) (optionally negated), expanded at the selected tier's precision:
constraints like alpha beta^N = pi^(N+1) cannot be met with decimal
literals.  Complex values are written re,im; lists are ;-separated.

Exit codes: 0 all reports passed, 1 at least one failing or errored report,
2 configuration error.  A failing grid point never aborts the rest of the
grid.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import asymptotics
from .arith import lambert_divisor, partition_counts
from .core import (
    ComplexValue,
    LxfError,
    Tier,
    TruncationPolicy,
    make_real,
    pi_real,
    rexp,
    rlog,
    to_float,
)
from .identities import REGISTRY
from .meijer import MeijerReductionParams, meijer_g_reduced, mellin_barnes_oracle


# ---------------------------------------------------------------------------
# symbolic numeric literals
# ---------------------------------------------------------------------------

def _parse_real_token(text: str):
    """One real literal: float, or [-]pi | 2pi | e with optional ^(p/q).

    Returns a float or a ('sym', sign, base, Fraction) tuple expanded later
    at tier precision.
    """
    s = text.strip()
    try:
        return float(s)
    except ValueError:
        pass
    sign = 1.0
    if s.startswith(("-", "+")):
        if s[0] == "-":
            sign = -1.0
        s = s[1:]
    base, _, rest = s.partition("^")
    if base not in ("pi", "2pi", "e"):
        raise ValueError(f"unrecognized numeric literal {text!r}")
    if rest:
        r = rest.strip()
        if r.startswith("(") and r.endswith(")"):
            r = r[1:-1]
        num, _, den = r.partition("/")
        try:
            power = Fraction(int(num), int(den) if den else 1)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad exponent in {text!r}: {exc}") from None
    else:
        power = Fraction(1)
    return ("sym", sign, base, power)


def _expand_real(token, t: Tier):
    if isinstance(token, float):
        return make_real(token, t)
    _, sign, base, power = token
    if base == "e":
        val = rexp(make_real(1.0, t))
    else:
        val = pi_real(t)
        if base == "2pi":
            val = val * 2.0
    if power != 1:
        val = rexp(rlog(val) * make_real(power, t))
    return val * sign


def parse_value(text: str):
    """'re' or 're,im' with symbolic tokens; kept unexpanded until the tier
    is known."""
    parts = text.split(",")
    if len(parts) not in (1, 2):
        raise ValueError(f"expected re or re,im, got {text!r}")
    return tuple(_parse_real_token(p) for p in parts)


def expand_value(value, t: Tier) -> ComplexValue:
    re = _expand_real(value[0], t)
    im = _expand_real(value[1], t) if len(value) == 2 else make_real(0.0, t)
    return ComplexValue(re, im)


def _value_list(text: str):
    entries = [e for e in text.split(";") if e.strip()]
    if not entries:
        raise ValueError("empty value list")
    return [parse_value(e) for e in entries]


def _int_list(text: str):
    return [int(e) for e in text.split(",") if e.strip()]


# ---------------------------------------------------------------------------
# report plumbing
# ---------------------------------------------------------------------------

def _json_line(d: dict) -> str:
    return json.dumps(d, separators=(",", ":"), sort_keys=False)


def _flatten_cell(v):
    if isinstance(v, (int, bool)):
        return str(v)
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, str):
        return v
    return json.dumps(v, separators=(",", ":"))


def _write_reports(dicts: list, param_names: tuple, fmt: str, out) -> None:
    if fmt == "json":
        for d in dicts:
            out.write(_json_line(d) + "\n")
        return
    cols = (["identity"] + list(param_names)
            + ["lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err",
               "lhs_terms", "rhs_terms", "tier", "pass", "tol", "flags",
               "error"])
    w = csv.writer(out, lineterminator="\n")
    w.writerow(cols)
    for d in dicts:
        params = d.get("params", {})
        row = [d.get("identity", "")]
        row += [_flatten_cell(_norm_param(params.get(p))) for p in param_names]
        lhs = d.get("lhs", ["", ""])
        rhs = d.get("rhs", ["", ""])
        row += [_flatten_cell(x) for x in (lhs[0], lhs[1], rhs[0], rhs[1])]
        row += [_flatten_cell(d.get(k, "")) for k in
                ("abs_err", "rel_err", "lhs_terms", "rhs_terms", "tier",
                 "pass", "tol")]
        row.append(";".join(d.get("flags", [])))
        row.append(d.get("error", ""))
        w.writerow(row)


def _norm_param(v):
    if isinstance(v, ComplexValue):
        return [to_float(v.re), to_float(v.im)]
    if isinstance(v, complex):
        return [v.real, v.imag]
    return v


def _norm_params_dict(params: dict) -> dict:
    return {k: _norm_param(v) for k, v in params.items()}


# ---------------------------------------------------------------------------
# verify / sweep
# ---------------------------------------------------------------------------

def _identity_grid(op, args, t: Tier):
    """Cartesian grid over the op's arguments in declaration order."""
    axes = []
    for name in op.arg_names:
        if name in ("N", "m"):
            vals = getattr(args, name)
            if vals is None:
                raise SystemExit2(f"--{name} is required for {op.name}")
            axes.append([("int", v) for v in vals])
        elif name in ("alpha", "beta"):
            raw = getattr(args, name)
            if raw is None:
                axes.append([None])
            else:
                axes.append([("cv", v) for v in _value_list(raw)])
        else:
            raw = getattr(args, name, None)
            if raw is None:
                raise SystemExit2(f"--{name} is required for {op.name}")
            axes.append([("cv", v) for v in _value_list(raw)])
    return list(itertools.product(*axes))


def _expand_point(point, t: Tier):
    out = []
    for cell in point:
        if cell is None:
            out.append(None)
        elif cell[0] == "int":
            out.append(cell[1])
        else:
            cv = expand_value(cell[1], t)
            # hand identities plain python scalars; they coerce per tier
            if to_float(cv.im) == 0.0 and cv.tier is Tier.DOUBLE:
                out.append(to_float(cv.re))
            elif to_float(cv.im) == 0.0:
                out.append(cv.re)          # DD real, exact at tier width
            else:
                out.append(cv)
    return tuple(out)


class SystemExit2(SystemExit):
    def __init__(self, message: str):
        print(f"error: {message}", file=sys.stderr)
        super().__init__(2)


def _accepts_policy(func) -> bool:
    import inspect
    return "policy" in inspect.signature(func).parameters


def _run_verify(args) -> int:
    if args.identity not in REGISTRY:
        raise SystemExit2(
            f"unknown identity {args.identity!r}; known: "
            + ", ".join(sorted(REGISTRY)))
    op = REGISTRY[args.identity]
    t = Tier.coerce(args.tier)
    policy = None
    if args.max_terms is not None:
        base = TruncationPolicy.for_tier(t)
        policy = TruncationPolicy(base.rel_tol, base.abs_tol,
                                  args.max_terms, base.small_run)
    grid = _identity_grid(op, args, t)
    use_policy = _accepts_policy(op.func)

    def eval_point(point):
        vals = _expand_point(point, t)
        kwargs = {"tier": t}
        if use_policy:
            kwargs["policy"] = policy
        try:
            rep = op.func(*vals, **kwargs)
            return rep.to_dict(args.tol)
        except LxfError as exc:
            named = {n: v for n, v in zip(op.arg_names, vals) if v is not None}
            return {"identity": op.name, "params": _norm_params_dict(named),
                    "error": exc.code, "message": str(exc), "pass": False}

    if args.workers > 1:
        with ThreadPoolExecutor(max_workers=args.workers) as pool:
            dicts = list(pool.map(eval_point, grid))
    else:
        dicts = [eval_point(p) for p in grid]
    for d in dicts:
        if "params" in d:
            d["params"] = _norm_params_dict(d["params"])
    ok = all(d.get("pass", False) for d in dicts)
    _emit(args, dicts, op.arg_names)
    return 0 if ok else 1


def _emit(args, dicts, param_names) -> None:
    buf = io.StringIO()
    _write_reports(dicts, tuple(param_names), args.format, buf)
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

def _run_partitions(args) -> int:
    table = partition_counts(args.N, args.max_n)
    if args.format == "json":
        text = _json_line({"N": table.N, "counts": table.counts}) + "\n"
    else:
        text = table.to_csv()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# asym
# ---------------------------------------------------------------------------

def _run_asym(args) -> int:
    t = Tier.coerce(args.tier)
    rows = []
    failed = False
    if args.kind == "sigma":
        if args.y is None:
            raise SystemExit2("asym --kind sigma requires --y")
        exp_ = asymptotics.sigma_series_asymptotic(args.N, args.m, args.r, t)
        a = 2 * args.N * args.m - 1 + args.N
        for vtok in _value_list(args.y):
            y = expand_value(vtok, t)
            exact = lambert_divisor(a, args.N, y.re, tier=t).value
            approx, flags = exp_.evaluate_report(y.re)
            err = (exact - approx).abs_float()
            row = {"kind": "sigma", "N": args.N, "m": args.m, "r": args.r,
                   "y": to_float(y.re), "exact": to_float(exact.re),
                   "asymptotic": to_float(approx.re), "abs_err": err,
                   "flags": flags}
            if args.tol is not None:
                row["pass"] = bool(err <= args.tol *
                                   max(abs(to_float(exact.re)), 1e-30))
                failed = failed or not row["pass"]
            rows.append(row)
    elif args.kind == "fn":
        if args.q is None:
            raise SystemExit2("asym --kind fn requires --q")
        for vtok in _value_list(args.q):
            q = to_float(expand_value(vtok, t).re)
            exact = to_float(asymptotics.fn_exact_log(args.N, q, tier=t).re)
            approx = to_float(asymptotics.fn_asymptotic_log(
                args.N, q, args.r, args.c, t).re)
            rows.append({"kind": "fn", "N": args.N, "r": args.r, "q": q,
                         "exact_log": exact, "asymptotic_log": approx,
                         "diff": exact - approx})
    else:
        try:
            fit = asymptotics.c_estimate(args.N, tier=t)
        except LxfError as exc:
            rows.append({"kind": "c", "N": args.N, "error": exc.code,
                         "message": str(exc)})
            failed = True
        else:
            row = {"kind": "c", "N": args.N, **fit.to_json_dict()}
            if args.N == 1:
                w = to_float(asymptotics.wright_constant_n1(tier=t).re)
                row["wright_integral"] = w
                row["wright_diff"] = abs(w - to_float(fit.value.re))
            rows.append(row)
    text = "".join(_json_line(r) + "\n" for r in rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# oracle
# ---------------------------------------------------------------------------

def _run_oracle(args) -> int:
    t = Tier.coerce(args.tier)
    rows = []
    ok = True
    for N in args.N:
        for atok in _value_list(args.a):
            for ztok in _value_list(args.z):
                av = expand_value(atok, t)
                zv = expand_value(ztok, t)
                p = MeijerReductionParams(a=av, N=N, z=zv, tier=t)
                row = {"N": N, "a": _norm_param(av), "z": _norm_param(zv)}
                try:
                    red = meijer_g_reduced(p)
                    mb = mellin_barnes_oracle(p)
                    scale = max(red.abs_float(), mb.abs_float(), 1e-30)
                    rel = (red - mb).abs_float() / scale
                    row.update({"reduced": _norm_param(red),
                                "oracle": _norm_param(mb), "rel_err": rel,
                                "pass": bool(rel <= args.tol)})
                    ok = ok and row["pass"]
                except LxfError as exc:
                    row.update({"error": exc.code, "message": str(exc),
                                "pass": False})
                    ok = False
                rows.append(row)
    text = "".join(_json_line(r) + "\n" for r in rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="lxf",
        description="Verify Lambert-series transformations, dump partition "
                    "tables, and run asymptotic comparisons.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_workers=True):
        p.add_argument("--tier", choices=["double", "extended"], default=None,
                       help="arithmetic tier (default: LXF_TIER or double)")
        p.add_argument("--format", choices=["json", "csv"], default="json",
                       help="json = one report per line")
        p.add_argument("--out", default=None, help="write to file, not stdout")
        if with_workers:
            p.add_argument("--workers", type=int, default=1,
                           help="concurrent grid evaluations (default 1)")

    for name in ("verify", "sweep"):
        p = sub.add_parser(
            name, help="evaluate an identity over a parameter grid")
        p.add_argument("--identity", required=True,
                       metavar="NAME", help=", ".join(sorted(REGISTRY)))
        p.add_argument("--N", type=_int_list, default=None,
                       help="comma-separated integers")
        p.add_argument("--m", type=_int_list, default=None,
                       help="comma-separated integers")
        for f in ("a", "y", "z", "s"):
            p.add_argument(f"--{f}", default=None,
                           help="re[,im] entries, ;-separated; "
                                "tokens pi, 2pi, e, pi^(p/q)")
        p.add_argument("--alpha", default=None, help="symbolic ok; omit to "
                       "derive from beta via alpha beta^N = pi^(N+1)")
        p.add_argument("--beta", default=None, help="symbolic ok; omit to "
                       "derive from alpha")
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--max-terms", type=int, default=None, dest="max_terms")
        common(p)
        p.set_defaults(func=_run_verify)

    p = sub.add_parser("partitions", help="dump a power-partition table")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    common(p, with_workers=False)
    p.set_defaults(func=_run_partitions, format_default="csv")
    p.set_defaults(format="csv")

    p = sub.add_parser("asym", help="asymptotic-vs-exact comparisons")
    p.add_argument("--kind", choices=["sigma", "fn", "c"], default="sigma")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--y", default=None, help=";-separated y values (sigma)")
    p.add_argument("--q", default=None, help=";-separated q values (fn)")
    p.add_argument("--c", type=float, default=0.0,
                   help="constant for --kind fn")
    p.add_argument("--tol", type=float, default=None,
                   help="absolute-relative pass bound for --kind sigma")
    common(p, with_workers=False)
    p.set_defaults(func=_run_asym)

    p = sub.add_parser("oracle", help="kernel reduction vs contour oracle")
    p.add_argument("--N", type=_int_list, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--z", required=True)
    p.add_argument("--tol", type=float, default=1e-5)
    common(p, with_workers=False)
    p.set_defaults(func=_run_oracle)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
