#!/usr/bin/env python3
"""Census experiment: compute the symmetry algebra of every zoo model,
time each solve, cross-check against brute force and print a table.

    python scripts/run_census.py [--zoo PATH] [--out results/census.json]
"""

from __future__ import annotations

import argparse
import json
import time
from pathlib import Path

from crsym.autalg import compute_algebra, compute_algebra_bruteforce, default_bruteforce_bound
from crsym.classify import is_levi_degenerate, recognize_special_family
from crsym.poly import pluriharmonic_split
from crsym.weights import variable_weights
from crsym.zoo import load_zoo


def run(zoo_path=None) -> list[dict]:
    rows = []
    for entry in load_zoo(zoo_path):
        P, _ = pluriharmonic_split(entry.poly())
        weights, _ = variable_weights(P)
        t0 = time.perf_counter()
        alg = compute_algebra(P)
        t_graded = time.perf_counter() - t0
        bound = default_bruteforce_bound(weights)
        t0 = time.perf_counter()
        brute, _ = compute_algebra_bruteforce(P, bound)
        t_brute = time.perf_counter() - t0
        family = recognize_special_family(P)
        rows.append({
            "name": entry.name,
            "model": entry.model,
            "expected": entry.expected_total_dim,
            "graded": alg.total_dim,
            "bruteforce": brute,
            "bound": bound,
            "grading": {str(k): v for k, v in sorted(alg.graded_dims().items())},
            "gc": alg.gc_dim,
            "gn": alg.gn_dim,
            "g1": alg.g1_dim,
            "family": str(family) if family else None,
            "levi_degenerate": is_levi_degenerate(P),
            "seconds_graded": round(t_graded, 3),
            "seconds_bruteforce": round(t_brute, 3),
        })
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--zoo", default=None)
    ap.add_argument("--out", default=None, help="write the rows as JSON")
    args = ap.parse_args()
    rows = run(args.zoo)
    hdr = f"{'name':26} {'dim':>4} {'exp':>4} {'brute':>5} {'gc':>3} {'gn':>3} {'g1':>3}  {'family':22} {'sec':>6}"
    print(hdr)
    print("-" * len(hdr))
    for r in rows:
        exp = "" if r["expected"] is None else r["expected"]
        print(f"{r['name']:26} {r['graded']:>4} {exp:>4} {r['bruteforce']:>5} {r['gc']:>3} {r['gn']:>3} {r['g1']:>3}  "
              f"{r['family'] or '-':22} {r['seconds_graded']:>6.2f}")
    degenerate_dims = sorted({r["graded"] for r in rows if r["levi_degenerate"]})
    print()
    print("Levi-degenerate dimensions observed:", degenerate_dims)
    print("all expected values matched:", all(r["expected"] in (None, r["graded"]) for r in rows))
    print("graded == brute force everywhere:", all(r["graded"] == r["bruteforce"] for r in rows))
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(json.dumps(rows, indent=2) + "\n")


if __name__ == "__main__":
    main()
