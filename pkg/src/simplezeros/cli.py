"""Command-line front end.  Every command writes one JSON document.

Exit codes: 0 success/CERTIFIED/PASS, 2 CONDITION_FAILS or failed
verification, 3 NOT_APPLICABLE, 4 input error, 5 numerical failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .certifier import Verdict, certify, certify_truncated_entire
from .constants import ThresholdTable
from .cubic import (
    cubic_from_quotients,
    discriminant3,
    max_modulus_scan,
    multiple_root_locus_residual,
)
from .extremal import (
    ExtremalSearchError,
    cubic_extremal,
    extremal_entire_truncation,
    extremal_even,
    extremal_odd,
    real_counterexample,
)
from .polyseries import (
    CoefficientRangeError,
    PolyInputError,
    parse_poly,
    parse_quotients,
    quotients,
    serialize_poly,
)
from .rootlab import ContourGuardError, WindingError, find_roots, realness_check, verify_annuli
from .sweep import run_sweep

EXIT_OK, EXIT_FAILS, EXIT_NA, EXIT_INPUT, EXIT_NUMERIC = 0, 2, 3, 4, 5
VERDICT_EXIT = {Verdict.CERTIFIED: EXIT_OK, Verdict.CONDITION_FAILS: EXIT_FAILS, Verdict.NOT_APPLICABLE: EXIT_NA}


class InputError(Exception):
    pass


def _finite(obj):
    # JSON has no inf/nan
    if isinstance(obj, float) and not math.isfinite(obj):
        return None
    if isinstance(obj, dict):
        return {k: _finite(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_finite(v) for v in obj]
    return obj


def _emit(doc: dict, args) -> None:
    doc = {"version": __version__, "command": args.command, **doc}
    text = json.dumps(_finite(doc), indent=None if args.json else 2)
    out = getattr(args, "out", None)
    if out and args.command != "extremal":
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None


def _thresholds(table: ThresholdTable, degree: int) -> dict:
    return {
        "b_degree": table.for_degree(degree),
        "b_inf": table.b_infinity,
        "cubic": table.cubic_constant,
    }


def _complex_arg(text: str) -> complex:
    try:
        parts = [float(x) for x in text.split(",")]
    except ValueError:
        raise InputError(f"expected RE,IM, got {text!r}") from None
    if len(parts) == 1:
        parts.append(0.0)
    if len(parts) != 2:
        raise InputError(f"expected RE,IM, got {text!r}")
    return complex(*parts)


def cmd_constants(args, table):
    if args.upto < 2:
        raise InputError("--upto must be >= 2")
    _emit(table.to_json(args.upto), args)
    return EXIT_OK


def cmd_certify(args, table):
    text = _read(args.inp)
    if args.theorem == "entire":
        seq = parse_quotients(text) if '"q"' in text else quotients(parse_poly(text))
        cert = certify_truncated_entire(seq, args.claimed_tail, table)
        degree = seq.degree
    else:
        p = parse_poly(text)
        cert = certify(p, args.theorem, table)
        degree = p.degree
    _emit({"certificate": cert.to_json(), "thresholds": _thresholds(table, degree)}, args)
    return VERDICT_EXIT[cert.verdict]


def cmd_roots(args, table):
    p = parse_poly(_read(args.inp))
    report = find_roots(p, tol=args.tol)
    _emit({"report": report.to_json()}, args)
    return EXIT_OK if report.converged else EXIT_NUMERIC


def cmd_verify(args, table):
    p = parse_poly(_read(args.inp))
    cert = certify(p, args.theorem, table)
    report = find_roots(p)
    doc = {
        "certificate": cert.to_json(),
        "thresholds": _thresholds(table, p.degree),
        "report": report.to_json(),
    }
    if not report.converged:
        _emit(doc, args)
        return EXIT_NUMERIC
    ok = True
    real_kind = cert.theorem.value.startswith("REAL") or cert.theorem.value == "HUTCHINSON_A"
    if real_kind:
        doc["real"] = realness_check(report)
        ok = doc["real"]
    if not real_kind or args.annuli:
        try:
            ver = verify_annuli(p, report)
        except (ContourGuardError, WindingError) as exc:
            doc["annuli"] = {"verdict": "ABSTAIN", "error": str(exc)}
            _emit(doc, args)
            return EXIT_NUMERIC
        doc["annuli"] = ver.to_json()
        ok = ok and ver.verdict == "PASS"
    doc["verdict"] = "PASS" if ok and cert.certified else "FAIL"
    _emit(doc, args)
    if cert.verdict is Verdict.NOT_APPLICABLE:
        return EXIT_NA
    return EXIT_OK if doc["verdict"] == "PASS" else EXIT_FAILS


def cmd_extremal(args, table):
    fam = args.family
    info = {"family": fam}
    if fam == "even":
        c = args.c if args.c is not None else table.b(args.n)
        p = extremal_even(args.n, c)
        info["c"] = c
    elif fam == "odd":
        w = extremal_odd(args.n, args.d, table)
        p = w.poly
        info.update(d=w.d, margin_vs_b_even=w.margin_vs_b_even, margin_vs_b_next=w.margin_vs_b_next)
    elif fam == "entire":
        t = extremal_entire_truncation(args.n, args.eps, args.levels, table)
        p = t.poly
        info.update(n0=t.n0, eps=t.eps, d=t.d, min_modulus=t.min_modulus)
    elif fam == "real":
        p = real_counterexample(args.n, args.delta, table)
        info["delta"] = args.delta
    else:
        p = cubic_extremal()
    info["quotient_moduli"] = [abs(q) for q in quotients(p).q]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(serialize_poly(p) + "\n")
        info["out"] = args.out
    else:
        info["coeffs"] = json.loads(serialize_poly(p))["coeffs"]
    _emit(info, args)
    return EXIT_OK


def cmd_cubic(args, table):
    if args.action == "scan":
        if args.grid < 2:
            raise InputError("--grid must be >= 2")
        _emit({"scan": max_modulus_scan(args.grid).to_json()}, args)
        return EXIT_OK
    a, b = _complex_arg(args.a), _complex_arg(args.b)
    if a == 0 or b == 0:
        raise InputError("a and b must be nonzero")
    r = multiple_root_locus_residual(a, b)
    d = discriminant3(cubic_from_quotients(a, b))
    _emit(
        {
            "a": [a.real, a.imag],
            "b": [b.real, b.imag],
            "locus_residual": [r.real, r.imag],
            "discriminant": [d.real, d.imag],
            "min_modulus": min(abs(a), abs(b)),
        },
        args,
    )
    return EXIT_OK


def cmd_sweep(args, table):
    try:
        degrees = [int(x) for x in str(args.degree).split(",")]
    except ValueError:
        raise InputError(f"bad --degree {args.degree!r}") from None
    try:
        summary = run_sweep(degrees, args.trials, args.margin_low, args.margin_high, args.seed, args.theorem, table)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    doc = summary.to_json()
    doc["thresholds"] = {str(d): _thresholds(table, d) for d in degrees}
    _emit({"summary": doc}, args)
    return EXIT_FAILS if summary.certified_failures() else EXIT_OK


THEOREMS = ["auto", "even", "odd", "uniform", "cubic", "real", "hutchinson"]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="compact single-line JSON")

    parser = argparse.ArgumentParser(prog="simplezeros", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", parents=[common], help="threshold constants b_2n, b_inf, cubic")
    p.add_argument("--tol", type=float, default=1e-12, help="root-solve tolerance for the constants")
    p.add_argument("--upto", type=int, default=8, help="largest even degree 2n")

    p = sub.add_parser("certify", parents=[common], help="certify a polynomial from its coefficients")
    p.add_argument("--tol", type=float, default=1e-12, help="root-solve tolerance for the constants")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--theorem", choices=THEOREMS + ["entire"], default="auto")
    p.add_argument("--claimed-tail", action="store_true", help="assert |q_k| >= b_inf beyond the prefix")

    p = sub.add_parser("roots", parents=[common], help="all zeros by simultaneous iteration")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--tol", type=float, default=1e-14, help="relative correction at which a root stops")

    p = sub.add_parser("verify", parents=[common], help="certify and cross-check with the oracles")
    p.add_argument("--tol", type=float, default=1e-12, help="root-solve tolerance for the constants")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--theorem", choices=THEOREMS, default="auto")
    p.add_argument("--annuli", action="store_true", help="also count zeros on the annulus circles for real certificates")

    p = sub.add_parser("extremal", parents=[common], help="build a sharpness witness")
    p.add_argument("--tol", type=float, default=1e-12, help="root-solve tolerance for the constants")
    p.add_argument("--family", choices=["even", "odd", "entire", "real", "cubic"], required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--c", type=float)
    p.add_argument("--d", type=float, default=1e4)
    p.add_argument("--delta", type=float, default=1e-3)
    p.add_argument("--eps", type=float, default=0.1)
    p.add_argument("--levels", type=int, default=8)
    p.add_argument("--out")

    p = sub.add_parser("cubic", parents=[common], help="degree-3 locus and max-modulus scan")
    csub = p.add_subparsers(dest="action", required=True)
    p.set_defaults(tol=1e-12)
    s = csub.add_parser("scan", parents=[common])
    s.add_argument("--grid", type=int, default=10_000)
    s = csub.add_parser("locus", parents=[common])
    s.add_argument("--a", required=True)
    s.add_argument("--b", required=True)

    p = sub.add_parser("sweep", parents=[common], help="seeded random certify-and-verify trials")
    p.add_argument("--tol", type=float, default=1e-12, help="root-solve tolerance for the constants")
    p.add_argument("--degree", default="4", help="degree or comma-separated degrees")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--margin-low", type=float, default=0.01)
    p.add_argument("--margin-high", type=float, default=5.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--theorem", choices=THEOREMS, default="auto")
    p.add_argument("--out")
    return parser


COMMANDS = {
    "constants": cmd_constants,
    "certify": cmd_certify,
    "roots": cmd_roots,
    "verify": cmd_verify,
    "extremal": cmd_extremal,
    "cubic": cmd_cubic,
    "sweep": cmd_sweep,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    # --tol on `roots` is the iteration tolerance, not the constants'
    table = ThresholdTable() if args.command == "roots" else ThresholdTable(tol=args.tol)
    try:
        return COMMANDS[args.command](args, table)
    except (InputError, PolyInputError, ValueError) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        _emit({"error": str(exc), "kind": "input"}, args)
        return EXIT_INPUT
    except (CoefficientRangeError, ContourGuardError, WindingError, ExtremalSearchError, ArithmeticError) as exc:
        sys.stderr.write(f"numerical failure: {exc}\n")
        _emit({"error": str(exc), "kind": "numerical"}, args)
        return EXIT_NUMERIC


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
