#!/usr/bin/env python3
"""Reduce the four worked planar examples and print their certificates.

Run: python3 scripts/worked_examples.py [--json]
"""
import argparse
import json
from fractions import Fraction

from addvol import RatAffineMap2D, Set2D, apply_affine, freiman_dim, reduce_dim
from addvol.cli import render_grid
from addvol.geometry import hull_lattice_count, volume_1d

EXAMPLES = {
    "first": [(-1, 3), (0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3), (2, 2), (3, 3)],
    "second": [(0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2), (2, 3)],
    "column-gap": [(0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (2, 2), (3, 2), (3, 3), (4, 2), (5, 2)],
    "contraction": [(0, 0), (0, 1), (0, 2), (0, 4), (0, 8), (3, 8), (4, 8), (5, 8), (6, 8),
                    (9, 8), (9, 4), (9, 2), (9, 1), (9, 0)],
}


def three_maps(A: Set2D):
    img = apply_affine(A, RatAffineMap2D.diag(Fraction(1, 3), 1))
    img = apply_affine(img, RatAffineMap2D.projection(16))
    return apply_affine(img, RatAffineMap2D.diag(1, 3)).to_set1d()


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="dump full reports")
    args = ap.parse_args()
    for name, pts in EXAMPLES.items():
        A = Set2D(pts)
        R = reduce_dim(A)
        print(f"== {name} (k={A.k})")
        print(render_grid(A))
        print(f"   case={R.spec.case} vector={R.spec.ell} T {R.T_before}->{R.T_after} "
              f"V {R.V_before}->{R.V_after} dim {R.dim_before}->{R.dim_after} "
              f"lambda {R.lambda_before}->{R.lambda_after} gaps={list(R.gap_values)}")
        print(f"   new relation: {R.new_relation_points()}")
        if name == "contraction":
            F = three_maps(A)
            print(f"   fixed three-map chain: {F.tolist()} V {hull_lattice_count(A)}->{volume_1d(F)} "
                  f"T {A.T}->{F.T} dim {freiman_dim(F)}")
        if args.json:
            print(json.dumps(R.to_dict(), indent=1, default=str))


if __name__ == "__main__":
    main()
