"""Command-line surface: every computation as a reproducible report.

All commands are batch-style and deterministic: identical flags produce
byte-identical output (stable key order, no timestamps).  JSON is the
default format; exact rationals serialize as {"num": ..., "den": ...}
objects so nothing ever passes through floating point on the exact
paths.  Exit codes: 0 success, 2 usage error, 3 feasibility-limit hit.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import __version__
from .errors import FeasibilityError
from .finite_field import audit_irreducible_counts, is_prime
from .integer_irreducibility import DEFAULT_SEARCH_LIMIT, is_irreducible_over_z
from .polynomials import (
    DEFAULT_ENUM_LIMIT,
    audit_bounds,
    claimed_lower_bound,
    claimed_upper_bound,
    count_admissible_exact,
    enumerate_admissible,
    target_sum,
)
from .sieve import audit_chebyshev, pipeline_lower_bound, primes_below


def _error(code: int, kind: str, message: str):
    sys.stderr.write(json.dumps({"kind": kind, "message": message}, sort_keys=True) + "\n")
    raise SystemExit(code)


class _Parser(argparse.ArgumentParser):
    # Usage errors must land on stderr as machine-parsable objects.
    def error(self, message):
        _error(2, "usage", message)


def _frac(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def _emit_json(payload: dict):
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit_csv(header: list[str], rows: list[list]):
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(v) for v in row])


def _envelope(command: str, parameters: dict, results: dict, exact: bool) -> dict:
    return {
        "command": command,
        "exact": exact,
        "parameters": parameters,
        "results": results,
        "toolkit_version": __version__,
    }


def _emit_report(args, command, parameters, results, exact, csv_table):
    if args.format == "csv":
        header, rows = csv_table
        _emit_csv(header, rows)
    else:
        _emit_json(_envelope(command, parameters, results, exact))


# --- commands --------------------------------------------------------------


def cmd_count(args):
    n, h = args.degree, args.height
    exact = count_admissible_exact(n, h)
    lower = claimed_lower_bound(n, h)
    upper = claimed_upper_bound(n, h)
    density = Fraction(exact, h ** (n - 1)) if h >= 1 else None
    results = {
        "claimed_lower": lower,
        "claimed_upper": upper,
        "density_ratio": None if density is None else _frac(density),
        "exact_count": exact,
        "lower_violated": lower > exact,
        "target_sum": target_sum(n),
        "upper_violated": upper < exact,
    }
    header = ["degree", "height", "exact_count", "claimed_lower", "claimed_upper",
              "density_ratio", "lower_violated", "upper_violated"]
    rows = [[n, h, exact, lower, upper, density, lower > exact, upper < exact]]
    _emit_report(args, "count", {"degree": n, "height": h}, results, True, (header, rows))


def cmd_enumerate(args):
    n, h = args.degree, args.height
    stream = enumerate_admissible(n, h, args.max_enum)
    limit = args.limit
    emitted = 0
    writer = None
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["degree"] + [f"a{i}" for i in range(n)])
    truncated = False
    for f in stream:
        if limit is not None and emitted >= limit:
            truncated = True
            break
        if writer is not None:
            writer.writerow([f.degree, *f.coeffs])
        else:
            sys.stdout.write(json.dumps(f.as_json_dict(), sort_keys=True) + "\n")
        emitted += 1
    if truncated:
        if writer is not None:
            sys.stdout.write("# truncated\n")
        else:
            sys.stdout.write(json.dumps({"emitted": emitted, "truncated": True},
                                        sort_keys=True) + "\n")


def cmd_irr_count(args):
    n, h = args.degree, args.height
    witnesses = []
    count = 0
    for f in enumerate_admissible(n, h, args.max_enum):
        w = is_irreducible_over_z(f, args.max_search)
        if w.irreducible:
            count += 1
            witnesses.append({"factors": None, "polynomial": f.text(), "status": w.status})
        else:
            g, fh = w.factors
            witnesses.append(
                {"factors": [g.text(), fh.text()], "polynomial": f.text(), "status": w.status}
            )
    ambient = count_admissible_exact(n, h)
    results = {
        "ambient_count": ambient,
        "irreducible_count": count,
        "witnesses": witnesses,
    }
    header = ["polynomial", "status", "factors"]
    rows = [
        [w["polynomial"], w["status"],
         "" if w["factors"] is None else f"({w['factors'][0]})({w['factors'][1]})"]
        for w in witnesses
    ]
    _emit_report(args, "irr-count", {"degree": n, "height": h}, results, True, (header, rows))


def cmd_sieve(args):
    report = pipeline_lower_bound(
        args.degree, args.height, args.z, args.max_enum, args.max_search
    )
    results = {
        "ambient_count": report.ambient_count,
        "chain_inequality_holds": report.chain_inequality_holds,
        "density": _frac(report.density),
        "error_term_reference": report.error_term_reference,
        "irreducible_count": report.irreducible_count,
        "main_term_reference": report.main_term_reference,
        "per_prime": [
            {
                "member_count": d.member_count,
                "p": d.p,
                "remainder": _frac(d.remainder),
                "remainder_reference": d.remainder_reference,
            }
            for d in report.per_prime
        ],
        "sifted_exact": report.sifted_exact,
        "turan_bound": None if report.turan_bound is None else _frac(report.turan_bound),
        "turan_inequality_holds": report.turan_inequality_holds,
        "z": report.z,
        "z_overridden": report.z_overridden,
    }
    params = {"degree": args.degree, "height": args.height}
    if args.z is not None:
        params["z"] = args.z
    header = ["degree", "height", "z", "ambient_count", "sifted_exact", "turan_bound",
              "irreducible_count", "turan_inequality_holds", "chain_inequality_holds"]
    rows = [[args.degree, args.height, report.z, report.ambient_count, report.sifted_exact,
             report.turan_bound, report.irreducible_count, report.turan_inequality_holds,
             report.chain_inequality_holds]]
    _emit_report(args, "sieve", params, results, False, (header, rows))


def cmd_fp_audit(args):
    primes = args.primes
    audit = audit_irreducible_counts(args.degree, primes)
    results = {
        "degree": audit.degree,
        "max_sq_normalized_error": _frac(audit.max_sq_normalized_error),
        "rows": [
            {
                "exact_count": r.exact_count,
                "main_term": _frac(r.main_term),
                "p": r.p,
                "sq_normalized_error": _frac(r.sq_normalized_error),
            }
            for r in audit.rows
        ],
        "within_sqrt_scale": audit.within_sqrt_scale,
    }
    header = ["p", "exact_count", "main_term", "sq_normalized_error"]
    rows = [[r.p, r.exact_count, r.main_term, r.sq_normalized_error] for r in audit.rows]
    _emit_report(args, "fp-audit", {"degree": args.degree, "primes": primes},
                 results, True, (header, rows))


def cmd_primes(args):
    ps = primes_below(args.below)
    results = {"below": args.below, "count": len(ps), "primes": list(ps)}
    header = ["p"]
    rows = [[p] for p in ps]
    _emit_report(args, "primes", {"below": args.below}, results, True, (header, rows))


def cmd_chebyshev(args):
    audit = audit_chebyshev(args.z_max)
    results = {
        "band": list(audit.band),
        "ratio_max": audit.ratio_max,
        "ratio_min": audit.ratio_min,
        "samples": [
            {"prime_count": s.prime_count, "ratio": s.ratio, "z": s.z} for s in audit.samples
        ],
        "scan_start": audit.scan_start,
        "within_band": audit.within_band,
        "z_max": audit.z_max,
    }
    header = ["z", "prime_count", "ratio"]
    rows = [[s.z, s.prime_count, s.ratio] for s in audit.samples]
    _emit_report(args, "chebyshev", {"z_max": args.z_max}, results, False, (header, rows))


def cmd_bounds_audit(args):
    reports = audit_bounds(args.degree, (args.h_min, args.h_max))
    results = {
        "reports": [
            {
                "claimed_lower": r.claimed_lower,
                "claimed_upper": r.claimed_upper,
                "density_ratio": None if r.density_ratio is None else _frac(r.density_ratio),
                "exact_count": r.exact_count,
                "height": r.height,
                "lower_violated": r.lower_violated,
                "upper_violated": r.upper_violated,
            }
            for r in reports
        ]
    }
    header = ["degree", "height", "exact_count", "claimed_lower", "claimed_upper",
              "density_ratio", "lower_violated", "upper_violated"]
    rows = [[r.degree, r.height, r.exact_count, r.claimed_lower, r.claimed_upper,
             r.density_ratio, r.lower_violated, r.upper_violated] for r in reports]
    _emit_report(args, "bounds-audit",
                 {"degree": args.degree, "h_max": args.h_max, "h_min": args.h_min},
                 results, True, (header, rows))


# --- parser ----------------------------------------------------------------


def _parse_primes(text: str) -> list[int]:
    try:
        primes = [int(tok) for tok in text.split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not primes:
        raise argparse.ArgumentTypeError("expected at least one prime")
    for p in primes:
        if not is_prime(p):
            raise argparse.ArgumentTypeError(f"not prime: {p}")
    return primes


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="admissible",
                     description="Exact census and bound audits for admissible polynomials.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_format(p, choices=("json", "csv"), default="json"):
        p.add_argument("--format", choices=choices, default=default)

    def add_limits(p, enum=False, search=False):
        if enum:
            p.add_argument("--max-enum", type=int, default=DEFAULT_ENUM_LIMIT,
                           help=f"enumeration feasibility limit (default {DEFAULT_ENUM_LIMIT})")
        if search:
            p.add_argument("--max-search", type=int, default=DEFAULT_SEARCH_LIMIT,
                           help=f"factor-search candidate limit (default {DEFAULT_SEARCH_LIMIT})")

    p = sub.add_parser("count", help="exact admissible count and claimed bounds")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    add_format(p)
    p.set_defaults(run=cmd_count)

    p = sub.add_parser("enumerate", help="stream the admissible polynomials in lex order")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--limit", type=int, default=None, help="stop after this many rows")
    add_format(p, choices=("jsonl", "csv"), default="jsonl")
    add_limits(p, enum=True)
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("irr-count", help="irreducibility census with witnesses")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    add_format(p)
    add_limits(p, enum=True, search=True)
    p.set_defaults(run=cmd_irr_count)

    p = sub.add_parser("sieve", help="run the sifting pipeline report")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--z", type=int, default=None, help="override the sieve level")
    add_format(p)
    add_limits(p, enum=True, search=True)
    p.set_defaults(run=cmd_sieve)

    p = sub.add_parser("fp-audit", help="irreducible counts over F_p vs p^n/n")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--primes", type=_parse_primes, required=True,
                   help="comma-separated primes, e.g. 2,3,5,7")
    add_format(p)
    p.set_defaults(run=cmd_fp_audit)

    p = sub.add_parser("primes", help="primes strictly below a bound")
    p.add_argument("--below", type=int, required=True)
    add_format(p)
    p.set_defaults(run=cmd_primes)

    p = sub.add_parser("chebyshev", help="prime-count ratio audit")
    p.add_argument("--z-max", type=int, required=True)
    add_format(p)
    p.set_defaults(run=cmd_chebyshev)

    p = sub.add_parser("bounds-audit", help="claimed bounds vs exact counts over a height range")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--h-min", type=int, required=True)
    p.add_argument("--h-max", type=int, required=True)
    add_format(p)
    p.set_defaults(run=cmd_bounds_audit)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.run(args)
    except FeasibilityError as exc:
        _error(3, "feasibility", str(exc))
    except (ValueError, ZeroDivisionError) as exc:
        _error(2, "usage", str(exc))
    return 0
