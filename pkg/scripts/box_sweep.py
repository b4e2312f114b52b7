#!/usr/bin/env python3
"""Run the reduction over every small planar set in an n x n box, up to symmetry.

Counts dimension-2 classes, certified reductions, sets with no valid
projection, and the case of the ladder that fired.
Run: python3 scripts/box_sweep.py --n 4 --kmax 6
"""
import argparse
from collections import Counter
from itertools import combinations

from addvol import Set2D, freiman_dim, reduce_dim
from addvol.errors import Collinear, NoValidVector

SYMMETRIES = [(1, 0, 0, 1), (-1, 0, 0, 1), (1, 0, 0, -1), (-1, 0, 0, -1),
              (0, 1, 1, 0), (0, -1, 1, 0), (0, 1, -1, 0), (0, -1, -1, 0)]


def canonical(pts):
    best = None
    for a, b, c, d in SYMMETRIES:
        q = [(a * x + b * y, c * x + d * y) for x, y in pts]
        mx, my = min(p[0] for p in q), min(p[1] for p in q)
        t = tuple(sorted((x - mx, y - my) for x, y in q))
        best = t if best is None or t < best else best
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--kmin", type=int, default=3)
    ap.add_argument("--kmax", type=int, default=6)
    args = ap.parse_args()
    grid = [(x, y) for x in range(args.n) for y in range(args.n)]
    classes = {canonical(c) for k in range(args.kmin, args.kmax + 1) for c in combinations(grid, k)}
    tally = Counter()
    for s in sorted(classes):
        A = Set2D(s)
        if freiman_dim(A) != 2:
            continue
        try:
            tally[reduce_dim(A).spec.case] += 1
        except NoValidVector:
            tally["no valid projection"] += 1
        except Collinear:
            tally["collinear"] += 1
    print(f"{len(classes)} classes, {sum(tally.values())} of dimension 2")
    for case, n in tally.most_common():
        print(f"  {case}: {n}")


if __name__ == "__main__":
    main()
