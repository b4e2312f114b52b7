"""Certified reduction of a two-dimensional set to a one-dimensional one.

A planar set of Freiman dimension 2 is placed in a strip ``0 <= y <= h2-1``
and projected onto the line x = 0 along a vector (1, m). The projection is a
one-to-one homomorphism that creates exactly one new independent relation,
so the image has dimension 1, a strictly smaller doubling and a volume that
does not shrink. Every returned report has been checked clause by clause.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import Collinear, DimNotTwo, NotInjective, NoValidVector
from .geometry import (
    StripForm,
    _columns,
    _place,
    _xgcd,
    axis_frame,
    corner_condition,
    hull_lattice_count,
    is_collinear,
    strip_normalize,
    volume_1d,
)
from .morphisms import (
    PairingMap,
    RatAffineMap2D,
    bareiss_rank,
    check_homomorphism,
    check_isomorphism,
    freiman_dim,
    relation_rows,
)
from .sets import BoundingBox, Set1D, Set2D, bounding_box


@dataclass(frozen=True)
class ColumnDelta:
    dx: int
    dy: int


@dataclass(frozen=True)
class DeltaProfile:
    columns: tuple[tuple[int, int, int], ...]  # (x, y_min, y_max)
    deltas: tuple[ColumnDelta, ...]
    tau: Fraction
    i0: int | None
    y0: int | None


@dataclass(frozen=True)
class ProjectionSpec:
    m: int
    case: str
    frame: StripForm

    @property
    def ell(self) -> tuple[int, int]:
        return (1, self.m)

    @property
    def matrix(self) -> RatAffineMap2D:
        return RatAffineMap2D.projection(self.m)


def column_deltas(S: StripForm) -> DeltaProfile:
    cols = _columns(S.set)
    columns = tuple((x, lo, hi) for x, (lo, hi) in cols.items())
    h2 = S.h2
    deltas = tuple(
        ColumnDelta(b[0] - a[0], b[2] - a[1]) for a, b in zip(columns, columns[1:])
    )
    ratios = [Fraction(d.dx, d.dy + h2 - 1) for d in deltas if d.dy + h2 - 1 > 0]
    tau = min(ratios) if ratios else Fraction(0)
    i0 = None
    best = None
    for i, d in enumerate(deltas):
        if d.dx == 1 and d.dy + h2 - 1 > 0:
            r = Fraction(1, d.dy + h2 - 1)
            if best is None or r < best:
                best, i0 = r, i
    y0 = cols[1][1] if 1 in cols else None
    return DeltaProfile(columns, deltas, tau, i0, y0)


def two_row_frame(S: StripForm) -> StripForm:
    """Re-frame a two-row set so its rows become the columns x = -1 and x = 0.

    Both rows are sheared to start at the same x, the longer row is put at
    y = 0, and the picture is turned so the longer row ends up in column 0.
    """
    row0 = [x for x, y in S.set if y == 0]
    row1 = [x for x, y in S.set if y == 1]
    shear = RatAffineMap2D(1, -(min(row1) - min(row0)), 0, 1, -min(row0), 0)
    sheared = [shear(p) for p in S.set]
    top = max(x for x, y in sheared if y == 1)
    bottom = max(x for x, y in sheared if y == 0)
    tr = shear
    if top > bottom:
        tr = tr.then(RatAffineMap2D(1, 0, 0, -1, 0, 1))
    tr = tr.then(RatAffineMap2D(0, -1, 1, 0))
    B, full = _place(S.set.points, tr)
    full = S.transform.then(full)
    return StripForm(B, bounding_box(B), full)


def projection_vector(S: StripForm, P: DeltaProfile | None = None) -> ProjectionSpec:
    """Pick m for the projection along (1, m) by the case ladder."""
    if P is None:
        P = column_deltas(S)
    h2 = S.h2
    A = S.set
    if h2 == 2:
        F = two_row_frame(S)
        return ProjectionSpec(2 * F.h2 - 2, "two-row", F)
    if corner_condition(A, h2):
        return ProjectionSpec(2 * (h2 - 1), "corner", S)
    if (0, 0) in A and (0, h2 - 1) in A and P.y0 is not None and 2 * P.y0 >= h2 - 1:
        return ProjectionSpec(h2 - 1 + P.y0, "adjacent-column", S)
    if P.i0 is not None and P.deltas[P.i0].dy >= 1:
        return ProjectionSpec(P.deltas[P.i0].dy + h2 - 1, "column-gap", S)
    raise NoValidVector("no case of the ladder applies")


def project(S: Set2D, spec: ProjectionSpec | int) -> Set1D:
    m = spec if isinstance(spec, int) else spec.m
    values = [y - m * x for x, y in S]
    if len(set(values)) != len(values):
        raise NotInjective(f"projection along (1, {m}) is not one-to-one")
    return Set1D(values)


@dataclass(frozen=True)
class ReductionReport:
    input: Set2D
    strip: StripForm
    spec: ProjectionSpec
    output: Set1D
    pairing: PairingMap
    T_before: int
    T_after: int
    V_before: int
    V_after: int
    dim_before: int
    dim_after: int
    lambda_before: int
    lambda_after: int
    new_relation: tuple[int, ...]
    gap_values: tuple[int, ...]
    homomorphism: bool
    isomorphism: bool

    @property
    def V_strict(self) -> bool:
        return self.V_after > self.V_before

    @property
    def box_volume(self) -> int:
        return self.strip.box.count

    def new_relation_points(self) -> dict:
        pts = list(self.input.points)
        lhs, rhs = [], []
        for i, c in enumerate(self.new_relation):
            (lhs if c > 0 else rhs).extend([pts[i]] * abs(c))
        return {"lhs": [list(p) for p in lhs], "rhs": [list(p) for p in rhs]}

    def to_dict(self) -> dict:
        return {
            "ref": "dimension-reduction certificate",
            "input": self.input.tolist(),
            "k": self.input.k,
            "strip": {
                "set": self.strip.set.tolist(),
                "transform": self.strip.transform.todict(),
                "a1": self.strip.box.a1, "a2": self.strip.box.a2,
                "h1": self.strip.h1, "h2": self.strip.h2,
            },
            "vector": list(self.spec.ell),
            "case": self.spec.case,
            "output": self.output.tolist(),
            "pairing": self.pairing.tolist(),
            "T_before": self.T_before, "T_after": self.T_after,
            "V_before": self.V_before, "V_after": self.V_after,
            "V_strict": self.V_strict,
            "box_volume": self.box_volume,
            "dim_before": self.dim_before, "dim_after": self.dim_after,
            "lambda_before": self.lambda_before, "lambda_after": self.lambda_after,
            "new_relation": list(self.new_relation),
            "new_relation_points": self.new_relation_points(),
            "gap_values": list(self.gap_values),
            "homomorphism": self.homomorphism,
            "isomorphism": self.isomorphism,
        }


def gap_values(box: BoundingBox, m: int, output: Set1D) -> tuple[int, ...]:
    hit = {y - m * x for x, y in box.lattice_points()}
    return tuple(v for v in range(output.min, output.max + 1) if v not in hit)


def gap_strips(R: ReductionReport) -> list[int]:
    return list(R.gap_values)


def certify(A: Set2D, spec: ProjectionSpec, T_before=None, V_before=None, rows_before=None):
    """Full report if every clause holds for this projection, else None."""
    F = spec.frame
    try:
        out = project(F.set, spec.m)
    except NotInjective:
        return None
    T_before = A.T if T_before is None else T_before
    if out.T >= T_before:
        return None
    V_before = hull_lattice_count(A) if V_before is None else V_before
    V_after = volume_1d(out)
    if V_after < V_before:
        return None
    labels = list(A.points)
    framed = [tuple(int(v) for v in F.transform(p)) for p in labels]
    images = [y - spec.m * x for x, y in framed]
    rows_before = set(relation_rows(labels)) if rows_before is None else rows_before
    rows_after = relation_rows(images)
    lam_before = bareiss_rank(rows_before)
    lam_after = bareiss_rank(rows_after)
    dim_after = A.k - 1 - lam_after
    if dim_after != 1:
        return None
    fresh = [r for r in rows_after if r not in rows_before]
    phi = PairingMap(zip(labels, images))
    return ReductionReport(
        input=A, strip=F, spec=spec, output=out, pairing=phi,
        T_before=T_before, T_after=out.T,
        V_before=V_before, V_after=V_after,
        dim_before=A.k - 1 - lam_before, dim_after=dim_after,
        lambda_before=lam_before, lambda_after=lam_after,
        new_relation=fresh[0] if fresh else (),
        gap_values=gap_values(F.box, spec.m, out),
        homomorphism=check_homomorphism(A, out, phi),
        isomorphism=check_isomorphism(A, out, phi),
    )


def candidate_frames(A: Set2D) -> list[StripForm]:
    frames = []
    for F in (axis_frame(A), axis_frame(A, transpose=True), strip_normalize(A)):
        if all(F.set != G.set for G in frames):
            frames.append(F)
    return frames


def fallback_bound(S: StripForm) -> int:
    return 4 * (S.h1 + S.h2)


def functional_frame(A: Set2D, f: tuple[int, int]) -> StripForm:
    """Unimodular frame whose second coordinate is the primitive functional f."""
    p, q = f
    _, s, r = _xgcd(q, p)
    B, tr = _place(A.points, RatAffineMap2D(s, -r, p, q))
    return StripForm(B, bounding_box(B), tr)


def _functionals(bound: int):
    fs = [(a, b) for a in range(-bound, bound + 1) for b in range(0, bound + 1)
          if gcd(a, b) == 1 and not (b == 0 and a <= 0)]
    return sorted(fs, key=lambda f: (abs(f[0]) + abs(f[1]), -f[1], f[0]))


def reduce_dim(A: Set2D) -> ReductionReport:
    if A.k < 3 or freiman_dim(A) != 2:
        raise DimNotTwo("reduction needs a set of Freiman dimension 2 with k >= 3")
    if is_collinear(A):
        # a line maps onto a line isomorphically, so no projection can lower T
        raise Collinear("a collinear set cannot be reduced by projection")
    T_before = A.T
    V_before = hull_lattice_count(A)
    rows_before = set(relation_rows(list(A.points)))
    frames = candidate_frames(A)
    for F in frames:
        try:
            spec = projection_vector(F)
        except NoValidVector:
            continue
        report = certify(A, spec, T_before, V_before, rows_before)
        if report is not None:
            return report
    for F in frames:
        for m in range(F.h2, fallback_bound(F) + 1):
            report = certify(A, ProjectionSpec(m, "fallback", F), T_before, V_before, rows_before)
            if report is not None:
                return report
    # last resort: every primitive direction, each in its own frame, read off along y
    for f in _functionals(fallback_bound(frames[0])):
        F = functional_frame(A, f)
        report = certify(A, ProjectionSpec(0, "fallback-functional", F), T_before, V_before, rows_before)
        if report is not None:
            return report
    raise NoValidVector("no projection passed the certificate")
