"""Lattice-point volume and strip placement of planar sets."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import Collinear
from .morphisms import RatAffineMap2D, apply_affine
from .sets import BoundingBox, Set1D, Set2D, bounding_box, normalize


def volume_1d(A: Set1D) -> int:
    B = normalize(A)
    return B.max - B.min + 1


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> list[tuple[int, int]]:
    """Vertices of the hull in counter-clockwise order (monotone chain).

    Collinear boundary points are dropped; a degenerate hull comes back as one
    or two vertices.
    """
    pts = sorted(set(map(tuple, points)))
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower, upper = half(pts), half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def in_hull(hull, p) -> bool:
    if len(hull) == 1:
        return tuple(p) == hull[0]
    if len(hull) == 2:
        a, b = hull
        return (_cross(a, b, p) == 0
                and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))
    n = len(hull)
    return all(_cross(hull[i], hull[(i + 1) % n], p) >= 0 for i in range(n))


def hull_lattice_count(A: Set2D) -> int:
    """Number of lattice points inside or on the convex hull of A."""
    hull = convex_hull(A.points)
    if len(hull) <= 2:
        if len(hull) == 1:
            return 1
        (x0, y0), (x1, y1) = hull
        return gcd(x1 - x0, y1 - y0) + 1
    box = bounding_box(A)
    return sum(1 for p in box.lattice_points() if in_hull(hull, p))


def is_collinear(A: Set2D) -> bool:
    return len(convex_hull(A.points)) <= 2


# ----------------------------------------------------------------------
# strip placement
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class StripForm:
    """A unimodular-affine image of a planar set sitting in the strip 0 <= y <= h2-1."""

    set: Set2D
    box: BoundingBox
    transform: RatAffineMap2D
    flip_x: bool = False
    flip_y: bool = False

    @property
    def h1(self) -> int:
        return self.box.h1

    @property
    def h2(self) -> int:
        return self.box.h2

    def pull_back(self, p):
        return tuple(int(v) for v in self.transform.inverse()(p))


def _place(points, transform: RatAffineMap2D) -> tuple[Set2D, RatAffineMap2D]:
    """Translate so the lowest row is y = 0; shift x only if 0 is outside the x-range."""
    B = apply_affine(points, transform).to_set2d()
    box = bounding_box(B)
    dx = 0 if box.a1 <= 0 <= box.x_max else -box.a1
    shift = RatAffineMap2D(t1=dx, t2=-box.a2)
    return apply_affine(B, shift).to_set2d(), transform.then(shift)


def _columns(A: Set2D) -> dict[int, tuple[int, int]]:
    cols: dict[int, list[int]] = {}
    for x, y in A:
        lo_hi = cols.setdefault(x, [y, y])
        lo_hi[0] = min(lo_hi[0], y)
        lo_hi[1] = max(lo_hi[1], y)
    return {x: (v[0], v[1]) for x, v in sorted(cols.items())}


def corner_condition(A: Set2D, h2: int) -> bool:
    """(0,0), (0,h2-1) and (1,h2-1) all lie in A."""
    return (0, 0) in A and (0, h2 - 1) in A and (1, h2 - 1) in A


def best_adjacent_delta(A: Set2D) -> int | None:
    """Largest y_{i+1,max} - y_{i,min} over neighbouring columns at distance 1."""
    cols = _columns(A)
    xs = list(cols)
    best = None
    for a, b in zip(xs, xs[1:]):
        if b - a == 1:
            d = cols[b][1] - cols[a][0]
            best = d if best is None else max(best, d)
    return best


def _orientation_key(A: Set2D, h2: int):
    d = best_adjacent_delta(A)
    return (corner_condition(A, h2), -1 if d is None else d)


def orient(points, transform: RatAffineMap2D) -> StripForm:
    """Place a set in its strip and pick the reflection that suits the projection step.

    The candidates are the identity and the reflections in x = 0 and in the
    middle row; the first one maximising (corner condition, best adjacent
    column drop) is kept.
    """
    S, base = _place(points, transform)
    h2 = bounding_box(S).h2
    best = None
    for fx, fy in ((False, False), (False, True), (True, False), (True, True)):
        refl = RatAffineMap2D(-1 if fx else 1, 0, 0, -1 if fy else 1, 0, h2 - 1 if fy else 0)
        cand, tr = _place(S, refl)
        key = _orientation_key(cand, h2)
        if best is None or key > best[0]:
            best = (key, cand, base.then(tr), fx, fy)
    _, S, tr, fx, fy = best
    return StripForm(S, bounding_box(S), tr, fx, fy)


def axis_frame(A: Set2D, transpose: bool = False) -> StripForm:
    """The set in its own coordinate axes (optionally swapped), placed and oriented."""
    base = RatAffineMap2D(0, 1, 1, 0) if transpose else RatAffineMap2D()
    return orient(A.points, base)


def _width(points, f) -> int:
    vals = [f[0] * x + f[1] * y for x, y in points]
    return max(vals) - min(vals) + 1


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def min_width_direction(A: Set2D, bound: int) -> tuple[int, int]:
    """Primitive functional (p, q) minimising the number of occupied rows p x + q y."""
    best = None
    for p in range(-bound, bound + 1):
        for q in range(0, bound + 1):
            if (q == 0 and p <= 0) or gcd(p, q) != 1:
                continue
            # prefer the y axis, then the x axis, then small coefficients
            key = (_width(A.points, (p, q)), (p, q) != (0, 1), (p, q) != (1, 0), abs(p) + abs(q), -q, -p)
            if best is None or key < best[0]:
                best = (key, (p, q))
    return best[1]


def strip_normalize(A: Set2D) -> StripForm:
    """Unimodular image of A in a strip of minimal height h2 (so h2 <= h1)."""
    if is_collinear(A):
        raise Collinear("a collinear set has no strip form")
    box = bounding_box(A)
    bound = max(box.h1, box.h2)
    p, q = min_width_direction(A, bound)
    _, s, r = _xgcd(q, p)  # s*q + r*p == 1
    g0 = (s, -r)           # g0 . (x, y) paired with f has det s*q + r*p = 1
    best = None
    for t in range(-bound, bound + 1):
        g = (g0[0] + t * p, g0[1] + t * q)
        for sign in (1, -1):
            gs = (sign * g[0], sign * g[1])
            first = next(v for v in gs if v)
            key = (_width(A.points, gs), abs(gs[0]) + abs(gs[1]), first < 0, -gs[0], -gs[1])
            if best is None or key < best[0]:
                best = (key, gs)
    g = best[1]
    frame = RatAffineMap2D(g[0], g[1], p, q)
    assert frame.is_unimodular
    return orient(A.points, frame)
