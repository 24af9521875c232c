"""Command-line front end.

Commands:
  compute   one value of one function, with its route label and diagnostics
  table     gamma_0 .. gamma_{first-1} at u = 1 by two routes, with the
            number of digits on which the routes agree
  verify    run the identity catalog and render a report

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 precision
exhausted.  Output formats: text (default), json, csv; --out redirects the
rendered report to a file.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional

from mpmath import mp, mpf

from .precision import (
    NonConvergenceError,
    PrecisionContext,
    PrecisionExhaustedError,
    agreed_digits,
)
from . import functions as F
from . import series
from .catalog import run_catalog

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_PRECISION = 3

COMPUTE_CHOICES = ("gamma_n", "digamma", "log_gamma", "hurwitz_zeta",
                   "barnes_g", "zeta_sderiv")

#: short spellings accepted for --method alongside the canonical names
METHOD_ALIASES = {
    "hasse": "hasse_sum",
    "coffey": "coffey_integral",
    "oracle": "limit_euler_maclaurin",
    "limit": "limit_euler_maclaurin",
    "altzeta": "alt_zeta_recursion",
}


@dataclass
class CliConfig:
    digits: int = 30
    method: Optional[str] = None
    format: str = "text"
    out: Optional[str] = None
    include_slow: bool = False


def _fmt(value, digits: int) -> str:
    """Decimal string with `digits` significant digits (round-trip safe).

    Pins its own working precision: callers may sit at any mp.dps, and
    re-wrapping an mpf rounds to the current precision.
    """
    with mp.workdps(digits + 10):
        return mp.nstr(+mpf(value), digits)


def _emit(text: str, cfg: CliConfig) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _usage_error(msg: str) -> int:
    print("error: %s" % msg, file=sys.stderr)
    return EXIT_USAGE


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

def _parse_number(text: str, name: str):
    try:
        return mpf(text)
    except Exception:
        raise ValueError("%s is not a number: %r" % (name, text))


def cmd_compute(args: argparse.Namespace, cfg: CliConfig) -> int:
    ctx = PrecisionContext.for_digits(cfg.digits)
    what = args.what
    try:
        with ctx.working():
            u = _parse_number(args.u, "--u")
            params = {}
            if what == "gamma_n":
                method = cfg.method or "limit_euler_maclaurin"
                method = METHOD_ALIASES.get(method, method)
                fv = F.stieltjes(args.n, u, method, ctx)
                params = {"n": args.n, "u": _fmt(u, cfg.digits)}
            elif what == "digamma":
                fv = F.digamma(u, ctx, args.route or "bose")
                params = {"u": _fmt(u, cfg.digits)}
            elif what == "log_gamma":
                fv = F.log_gamma(u, args.route or "binet2", ctx)
                params = {"u": _fmt(u, cfg.digits)}
            elif what == "hurwitz_zeta":
                s = _parse_number(args.s if args.s is not None else "2",
                                  "--s")
                fv = F.hurwitz_zeta(s, u, ctx)
                params = {"s": _fmt(s, cfg.digits),
                          "u": _fmt(u, cfg.digits)}
            elif what == "barnes_g":
                t = _parse_number(args.t, "--t")
                fv = F.barnes_g_log(t, args.route or "integral_6_7", ctx)
                params = {"t": _fmt(t, cfg.digits)}
            elif what == "zeta_sderiv":
                s = _parse_number(args.s if args.s is not None else "0",
                                  "--s")
                fv = F.hurwitz_zeta_sderiv(args.order, s, u, ctx)
                params = {"order": args.order, "s": _fmt(s, cfg.digits),
                          "u": _fmt(u, cfg.digits)}
            else:
                return _usage_error("unknown function %r" % what)
            value_str = _fmt(fv.value, cfg.digits)
            diag = {k: (v if isinstance(v, (int, str, type(None)))
                        else _fmt(v, 8))
                    for k, v in sorted(fv.diagnostics.items())}
    except PrecisionExhaustedError as exc:
        print("precision exhausted: %s" % exc, file=sys.stderr)
        return EXIT_PRECISION
    except (ValueError, NonConvergenceError) as exc:
        return _usage_error(str(exc))

    if cfg.format == "json":
        payload = {
            "context": {"digits": cfg.digits},
            "function": what,
            "params": params,
            "value": value_str,
            "route": fv.route,
            "diagnostics": diag,
        }
        _emit(json.dumps(payload, indent=2) + "\n", cfg)
    elif cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["function", "value", "route"])
        w.writerow([what, value_str, fv.route])
        _emit(buf.getvalue(), cfg)
    else:
        args_txt = ", ".join("%s=%s" % (k, v) for k, v in params.items())
        lines = ["%s(%s) = %s" % (what, args_txt, value_str),
                 "route: %s" % fv.route]
        if diag:
            lines.append("diagnostics: " + " ".join(
                "%s=%s" % (k, v) for k, v in diag.items()))
        _emit("\n".join(lines) + "\n", cfg)
    return EXIT_OK


# ---------------------------------------------------------------------------
# table
# ---------------------------------------------------------------------------

def cmd_table(args: argparse.Namespace, cfg: CliConfig) -> int:
    if not 1 <= args.first <= 25:
        return _usage_error("--first must be between 1 and 25")
    ctx = PrecisionContext.for_digits(cfg.digits)
    try:
        with ctx.working():
            rows = []
            for n in range(args.first):
                a = series.limit_stieltjes_oracle(n, 1, ctx)
                b = series.stieltjes_from_altzeta(n, ctx)
                rows.append((n, _fmt(a, cfg.digits),
                             agreed_digits(a, b, ctx)))
    except PrecisionExhaustedError as exc:
        print("precision exhausted: %s" % exc, file=sys.stderr)
        return EXIT_PRECISION
    except (ValueError, NonConvergenceError) as exc:
        return _usage_error(str(exc))

    if cfg.format == "json":
        payload = {
            "context": {"digits": cfg.digits},
            "rows": [{"n": n, "value": v, "routes_agreeing_digits": d}
                     for n, v, d in rows],
        }
        _emit(json.dumps(payload, indent=2) + "\n", cfg)
    elif cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["n", "value", "routes_agreeing_digits"])
        for n, v, d in rows:
            w.writerow([n, v, d])
        _emit(buf.getvalue(), cfg)
    else:
        width = max(len(v) for _, v, _ in rows)
        lines = ["%3s  %-*s  %s" % ("n", width, "value", "agreed")]
        for n, v, d in rows:
            lines.append("%3d  %-*s  %d" % (n, width, v, d))
        _emit("\n".join(lines) + "\n", cfg)

    short = [n for n, _, d in rows if d < cfg.digits]
    if short:
        print("rows below %d agreed digits: %s" % (cfg.digits, short),
              file=sys.stderr)
        return EXIT_PRECISION
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def _report_payload(rep, cfg: CliConfig) -> dict:
    entries = []
    for o in rep.outcomes:
        e = {
            "id": o.entry_id,
            "paper_anchor": o.paper_anchor,
            "lhs": None if o.lhs_value is None else _fmt(o.lhs_value,
                                                         cfg.digits),
            "rhs": None if o.rhs_value is None else _fmt(o.rhs_value,
                                                         cfg.digits),
            "abs_error": None if o.abs_error is None else _fmt(o.abs_error,
                                                               8),
            "tolerance": _fmt(o.tolerance, 8),
            "pass": o.passed,
            "elapsed_ms": round(o.elapsed_ms, 3),
        }
        if o.failure:
            e["error"] = o.failure
        entries.append(e)
    return {
        "context": {"digits": cfg.digits},
        "entries": entries,
        "summary": {"total": rep.total, "passed": rep.passed,
                    "failed": rep.failed},
    }


def cmd_verify(args: argparse.Namespace, cfg: CliConfig) -> int:
    if args.id is not None:
        filt = args.id
    elif args.tag is not None:
        filt = args.tag
    else:
        filt = None
    ctx = PrecisionContext.for_digits(cfg.digits)
    try:
        rep = run_catalog(filter=filt, ctx=ctx,
                          include_slow=cfg.include_slow)
    except ValueError as exc:
        return _usage_error(str(exc))

    payload = _report_payload(rep, cfg)
    if cfg.format == "json":
        _emit(json.dumps(payload, indent=2) + "\n", cfg)
    elif cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["id", "paper_anchor", "lhs", "rhs", "abs_error",
                    "tolerance", "pass", "elapsed_ms"])
        for e in payload["entries"]:
            w.writerow([e["id"], e["paper_anchor"], e["lhs"], e["rhs"],
                        e["abs_error"], e["tolerance"], e["pass"],
                        e["elapsed_ms"]])
        _emit(buf.getvalue(), cfg)
    else:
        lines = []
        for e in payload["entries"]:
            status = "pass" if e["pass"] else "FAIL"
            detail = ("err=%s tol=%s" % (e["abs_error"], e["tolerance"])
                      if e["abs_error"] is not None
                      else "error: %s" % e.get("error", "?"))
            lines.append("%-14s %-4s %s  (%.0f ms)"
                         % (e["id"], status, detail, e["elapsed_ms"]))
        s = payload["summary"]
        lines.append("total %d  passed %d  failed %d"
                     % (s["total"], s["passed"], s["failed"]))
        _emit("\n".join(lines) + "\n", cfg)
    return EXIT_OK if rep.failed == 0 else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _digits_type(text: str) -> int:
    try:
        d = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("digits must be an integer")
    if not 6 <= d <= 200:
        raise argparse.ArgumentTypeError("digits must be in [6, 200]")
    return d


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--digits", type=_digits_type, default=30,
                        help="target digits, 6..200 (default 30)")
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default="text", help="output format")
    common.add_argument("--out", default=None,
                        help="write the report to this file")

    p = argparse.ArgumentParser(
        prog="stieltjes",
        description="Stieltjes constants and their special-function web, "
                    "every value computable by independent routes.")
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", parents=[common],
                        help="compute one value")
    pc.add_argument("what", choices=COMPUTE_CHOICES)
    pc.add_argument("--n", type=int, default=0,
                    help="order for gamma_n (default 0)")
    pc.add_argument("--u", default="1", help="argument u > 0 (default 1)")
    pc.add_argument("--s", default=None,
                    help="s for hurwitz_zeta / zeta_sderiv")
    pc.add_argument("--t", default="1",
                    help="t for barnes_g, log G(1+t) (default 1)")
    pc.add_argument("--order", type=int, choices=(1, 2), default=1,
                    help="derivative order for zeta_sderiv")
    pc.add_argument("--method", default=None,
                    help="gamma_n route, one of %s or a short alias "
                         "(hasse, coffey, oracle, altzeta); default "
                         "limit_euler_maclaurin, certified at any "
                         "requested digits; hasse refuses tolerances it "
                         "cannot reach" % (", ".join(F.STIELTJES_METHODS)))
    pc.add_argument("--route", default=None,
                    help="route override for digamma/log_gamma/barnes_g")

    pt = sub.add_parser("table", parents=[common],
                        help="tabulate gamma_0..gamma_{first-1} at u=1")
    pt.add_argument("--first", type=int, default=20,
                    help="row count, 1..25 (default 20)")

    pv = sub.add_parser("verify", parents=[common],
                        help="run the identity catalog")
    sel = pv.add_mutually_exclusive_group()
    sel.add_argument("--all", action="store_true",
                     help="run every entry (default)")
    sel.add_argument("--id", default=None, help="run one entry by id")
    sel.add_argument("--tag", default=None,
                     help="run entries carrying one tag")
    pv.add_argument("--include-slow", action="store_true",
                    help="include slow-tagged entries")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = CliConfig(digits=args.digits,
                    method=getattr(args, "method", None),
                    format=args.format,
                    out=args.out,
                    include_slow=getattr(args, "include_slow", False))
    if args.command == "compute":
        return cmd_compute(args, cfg)
    if args.command == "table":
        return cmd_table(args, cfg)
    if args.command == "verify":
        return cmd_verify(args, cfg)
    return _usage_error("unknown command %r" % args.command)


if __name__ == "__main__":
    sys.exit(main())
