"""Command-line interface.

Exit codes: 0 success, 1 mismatch or counterexample, 2 validation error,
3 nondegeneracy undecided at the requested bound.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from crsym.autalg import (
    compute_algebra,
    compute_algebra_bruteforce,
    default_bruteforce_bound,
    weight_profile,
)
from crsym.classify import SCHEMA, Nondegeneracy, analyze
from crsym.errors import CRSymError
from crsym.poly import format_model, parse_model, pluriharmonic_split
from crsym.sweep import ALLOWED_DIMS, SweepConfig, run_sweep
from crsym.weights import variable_weights
from crsym.zoo import load_zoo

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_UNKNOWN = 0, 1, 2, 3


def _emit(obj, fmt: str, markdown: str, out):
    if fmt == "json":
        out.write(json.dumps(obj, indent=2) + "\n")
    else:
        out.write(markdown)


def _error(msg: str) -> int:
    sys.stderr.write(f"error: {msg}\n")
    return EXIT_INVALID


# --------------------------------------------------------------------------
# analyze
# --------------------------------------------------------------------------

def cmd_analyze(args, out=sys.stdout) -> int:
    try:
        report = analyze(args.model, bound=args.bound)
    except (CRSymError, ValueError) as exc:
        return _error(str(exc))
    if args.format == "json":
        out.write(report.to_json() + "\n")
    else:
        out.write(report.to_markdown())
    if report.nondegeneracy == Nondegeneracy.UnknownAtBound.value:
        return EXIT_UNKNOWN
    return EXIT_OK


# --------------------------------------------------------------------------
# census
# --------------------------------------------------------------------------

def _census_row(entry):
    report = analyze(entry.model, embed=False)
    return {
        "name": entry.name,
        "model": entry.model,
        "computed": report.total_dim,
        "expected": entry.expected_total_dim,
        "match": entry.expected_total_dim is None or report.total_dim == entry.expected_total_dim,
        "control": entry.is_control,
        "warnings": report.warnings,
    }


def cmd_census(args, out=sys.stdout) -> int:
    try:
        entries = load_zoo(args.zoo)
    except (OSError, ValueError) as exc:
        return _error(f"cannot read zoo: {exc}")
    if not entries:
        return _error("zoo is empty")
    try:
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                rows = list(pool.map(_census_row, entries))
        else:
            rows = [_census_row(e) for e in entries]
    except (CRSymError, ValueError) as exc:
        return _error(str(exc))
    observed = sorted({r["computed"] for r in rows if not r["control"] and r["computed"] is not None})
    gap_ok = 8 not in observed
    ok = all(r["match"] for r in rows) and gap_ok
    summary = {"schema": SCHEMA, "rows": rows, "observed_dims": observed, "eight_absent": gap_ok, "ok": ok}
    lines = ["| name | model | computed | expected | match |", "|---|---|---|---|---|"]
    for r in rows:
        exp = "" if r["expected"] is None else r["expected"]
        lines.append(f"| {r['name']} | `{r['model']}` | {r['computed']} | {exp} | {'yes' if r['match'] else 'NO'} |")
    lines.append("")
    lines.append(f"observed dimensions (Levi-degenerate entries): {observed}")
    lines.append(f"dimension 8 absent: {'yes' if gap_ok else 'NO'}")
    _emit(summary, args.format, "\n".join(lines) + "\n", out)
    return EXIT_OK if ok else EXIT_MISMATCH


# --------------------------------------------------------------------------
# oracle
# --------------------------------------------------------------------------

def cmd_oracle(args, out=sys.stdout) -> int:
    try:
        P, _ = pluriharmonic_split(parse_model(args.model))
        weights, _ = variable_weights(P)
    except (CRSymError, ValueError) as exc:
        return _error(str(exc))
    bound = args.bound if args.bound is not None else default_bruteforce_bound(weights)
    needed = default_bruteforce_bound(weights) - 1
    warnings = []
    if bound < needed:
        warnings.append(f"UnknownCoverage: bound {bound} is below {needed}; brute force may miss fields")
    alg = compute_algebra(P, weights, brackets=False)
    dim, basis = compute_algebra_bruteforce(P, bound)
    graded = alg.graded_dims()
    brute = weight_profile(basis, weights)
    per_weight = [
        {"weight": str(nu), "graded": graded.get(nu, 0), "bruteforce": brute.get(nu, 0)}
        for nu in sorted(set(graded) | set(brute))
    ]
    agree = dim == alg.total_dim and all(r["graded"] == r["bruteforce"] for r in per_weight)
    record = {
        "schema": SCHEMA,
        "model": format_model(P),
        "bound": bound,
        "graded_dim": alg.total_dim,
        "bruteforce_dim": dim,
        "per_weight": per_weight,
        "agree": agree,
        "warnings": warnings,
    }
    lines = [f"graded: {alg.total_dim}  brute force (bound {bound}): {dim}", "", "| weight | graded | brute force |", "|---|---|---|"]
    for r in per_weight:
        lines.append(f"| {r['weight']} | {r['graded']} | {r['bruteforce']} |")
    for wmsg in warnings:
        lines.append(f"warning: {wmsg}")
    lines.append(f"agree: {'yes' if agree else 'NO'}")
    _emit(record, args.format, "\n".join(lines) + "\n", out)
    if agree or warnings:
        return EXIT_OK
    return EXIT_MISMATCH


# --------------------------------------------------------------------------
# sweep
# --------------------------------------------------------------------------

def _parse_coefficients(text: str):
    return tuple(Fraction(x) for x in text.split(",") if x.strip())


def cmd_sweep(args, out=sys.stdout) -> int:
    try:
        coeffs = _parse_coefficients(args.coefficients)
    except ValueError as exc:
        return _error(f"bad coefficient list: {exc}")
    if args.count < 0 or args.max_degree < 2 or args.max_support < 1 or not coeffs:
        return _error("count >= 0, max degree >= 2, max support >= 1 and a coefficient set are required")
    cfg = SweepConfig(
        count=args.count,
        seed=args.seed,
        max_degree=args.max_degree,
        max_support=args.max_support,
        coefficients=coeffs,
    )
    res = run_sweep(cfg, jobs=args.jobs)
    summary = {"schema": SCHEMA, "seed": args.seed, **res.to_dict(), "allowed": sorted(ALLOWED_DIMS)}
    lines = [f"models: {len(res.models)} (drawn {res.attempts})", "", "| dim | count |", "|---|---|"]
    for d, c in sorted(res.histogram.items()):
        lines.append(f"| {d} | {c} |")
    for ce in res.counterexamples:
        lines.append(f"COUNTEREXAMPLE: dim {ce['total_dim']} for `{ce['model']}`")
    for wr in res.warnings:
        lines.append(f"warning: `{wr['model']}`: {wr['warning']}")
    _emit(summary, args.format, "\n".join(lines) + "\n", out)
    return EXIT_MISMATCH if res.counterexamples else EXIT_OK


# --------------------------------------------------------------------------
# zoo
# --------------------------------------------------------------------------

def cmd_zoo(args, out=sys.stdout) -> int:
    try:
        entries = load_zoo(args.zoo)
    except (OSError, ValueError) as exc:
        return _error(f"cannot read zoo: {exc}")
    data = [e.to_dict() for e in entries]
    lines = ["| name | model | expected | tag |", "|---|---|---|---|"]
    for e in entries:
        exp = "" if e.expected_total_dim is None else e.expected_total_dim
        lines.append(f"| {e.name} | `{e.model}` | {exp} | {e.citation} |")
    _emit(data, args.format, "\n".join(lines) + "\n", out)
    return EXIT_OK


# --------------------------------------------------------------------------
# entry point
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="crsym", description="Symmetry algebras of model hypersurfaces Im w = P(z, conj z) in C^3.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, bound=False, jobs=False, zoo=False):
        p.add_argument("--format", choices=("json", "md"), default="json")
        if bound:
            p.add_argument("--bound", type=int, default=None)
        if jobs:
            p.add_argument("--jobs", type=int, default=1)
        if zoo:
            p.add_argument("--zoo", default=None, help="zoo JSON file (default: bundled zoo)")

    p = sub.add_parser("analyze", help="full analysis report for one model")
    p.add_argument("model")
    common(p, bound=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("census", help="check every zoo entry against its expected dimension")
    common(p, jobs=True, zoo=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("oracle", help="compare the graded solver with brute force")
    p.add_argument("model")
    common(p, bound=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("sweep", help="seeded random sweep of Levi-degenerate models")
    common(p, jobs=True)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--max-degree", type=int, default=6)
    p.add_argument("--max-support", type=int, default=6)
    p.add_argument("--coefficients", default="1,-1,2,-2,1/2,3", help="comma-separated rationals")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("zoo", help="list the zoo")
    common(p, zoo=True)
    p.set_defaults(func=cmd_zoo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
