"""Independent reference implementations used only by the tests.

Nothing here imports the package's algorithms: sums are enumerated pair by
pair, ranks come from sympy and hull membership from scipy's Delaunay
triangulation, so agreement with the library is a genuine cross-check.
"""
from itertools import combinations_with_replacement, product

import numpy as np
import sympy
from scipy.spatial import Delaunay


def add(a, b):
    if isinstance(a, tuple):
        return (a[0] + b[0], a[1] + b[1])
    return a + b


def naive_doubling(points) -> set:
    pts = list(points)
    return {add(a, b) for a in pts for b in pts}


def quadruples(points):
    """All (i, j, r, s) with i <= j, r <= s, {i,j} != {r,s} and a_i + a_j == a_r + a_s."""
    pts = list(points)
    pairs = list(combinations_with_replacement(range(len(pts)), 2))
    for (i, j), (r, s) in product(pairs, pairs):
        if (i, j) < (r, s) and add(pts[i], pts[j]) == add(pts[r], pts[s]):
            yield i, j, r, s


def naive_is_hom(points, image) -> bool:
    return all(add(image[i], image[j]) == add(image[r], image[s])
               for i, j, r, s in quadruples(points))


def naive_is_iso(points, image) -> bool:
    if len(set(image)) != len(image):
        return False
    fwd = naive_is_hom(points, image)
    back = naive_is_hom(image, points)
    return fwd and back


def sympy_lambda(points) -> int:
    k = len(points)
    rows = []
    for i, j, r, s in quadruples(points):
        v = [0] * k
        v[i] += 1
        v[j] += 1
        v[r] -= 1
        v[s] -= 1
        rows.append(v)
    if not rows:
        return 0
    return sympy.Matrix(rows).rank()


def sympy_dim(points) -> int:
    return len(points) - 1 - sympy_lambda(points)


def scipy_hull_count(points) -> int:
    """Lattice points in the closed hull of a non-collinear planar set."""
    arr = np.array(points, dtype=float)
    tri = Delaunay(arr)
    (x0, y0), (x1, y1) = arr.min(axis=0).astype(int), arr.max(axis=0).astype(int)
    grid = np.array([(x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)], dtype=float)
    return int((tri.find_simplex(grid, tol=1e-9) >= 0).sum())


def pick_count(hull) -> int:
    """Lattice points of a lattice polygon from its vertex list via Pick's theorem."""
    from math import gcd
    n = len(hull)
    twice_area = abs(sum(hull[i][0] * hull[(i + 1) % n][1] - hull[(i + 1) % n][0] * hull[i][1]
                         for i in range(n)))
    boundary = sum(gcd(abs(hull[(i + 1) % n][0] - hull[i][0]), abs(hull[(i + 1) % n][1] - hull[i][1]))
                   for i in range(n))
    interior = (twice_area - boundary + 2) // 2
    return interior + boundary
