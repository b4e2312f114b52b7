#!/usr/bin/env python3
"""Tabulate the brute-force maximal length a_m against the closed form.

Run: python3 scripts/conjecture_table.py --kmax 6 --band c3 [--workers 4] [--tsv out.tsv]
"""
import argparse
import csv
import sys
import time

from addvol import SearchBudget, conjecture_scan
from addvol.search import BANDS


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--kmin", type=int, default=3)
    ap.add_argument("--kmax", type=int, default=6)
    ap.add_argument("--band", choices=BANDS, default="c3")
    ap.add_argument("--max-length", type=int, default=64)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--tsv", help="also write the table here")
    args = ap.parse_args()
    budget = SearchBudget(args.max_length, max(args.kmax, 3), 10 ** 9)
    t = time.perf_counter()
    rows = conjecture_scan(args.kmax, args.band, kmin=args.kmin, budget=budget, workers=args.workers,
                           progress=lambda r: print(f"  k={r['k']} T={r['T']}", file=sys.stderr))
    cols = ["k", "T", "c", "b", "formula_a_m", "brute_a_m", "match"]
    print("\t".join(cols))
    for r in rows:
        print("\t".join(str(r[c]) for c in cols))
    mism = [r for r in rows if not r["match"]]
    print(f"# {len(rows)} rows, {len(mism)} mismatches, {time.perf_counter() - t:.1f}s", file=sys.stderr)
    if args.tsv:
        with open(args.tsv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=cols, delimiter="\t")
            w.writeheader()
            w.writerows(rows)


if __name__ == "__main__":
    main()
