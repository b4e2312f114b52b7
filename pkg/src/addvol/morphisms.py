"""Freiman morphisms of order 2, relation vectors and dimension."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import MapNotTotal, MapTargetOutside
from .sets import Set1D, Set2D, _add


# ----------------------------------------------------------------------
# relation vectors and rank
# ----------------------------------------------------------------------

def canonical_row(row: Sequence[int]) -> tuple[int, ...]:
    for v in row:
        if v:
            return tuple(row) if v > 0 else tuple(-x for x in row)
    return tuple(row)


def relation_vector(k: int, lhs: tuple[int, int], rhs: tuple[int, int]) -> tuple[int, ...]:
    """Row encoding ``a_i + a_j = a_r + a_s`` (indices into a k-element set)."""
    row = [0] * k
    for i in lhs:
        row[i] += 1
    for r in rhs:
        row[r] -= 1
    return canonical_row(row)


def relation_rows(elements: Sequence) -> list[tuple[int, ...]]:
    """All distinct relations among ``elements`` (ints or 2-tuples), canonical and sorted.

    Index i of each row refers to ``elements[i]``; the caller fixes the labelling.
    """
    k = len(elements)
    by_sum = defaultdict(list)
    for i in range(k):
        for j in range(i, k):
            by_sum[_add(elements[i], elements[j])].append((i, j))
    rows = set()
    for pairs in by_sum.values():
        for n, lhs in enumerate(pairs):
            for rhs in pairs[n + 1:]:
                rows.add(relation_vector(k, lhs, rhs))
    rows.discard((0,) * k)
    return sorted(rows, reverse=True)


def bareiss_rank(rows: Iterable[Sequence[int]]) -> int:
    """Exact rank over Q by fraction-free elimination."""
    M = [list(r) for r in rows]
    if not M:
        return 0
    n_cols = len(M[0])
    rank = 0
    prev = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(M)) if M[r][col]), None)
        if pivot is None:
            continue
        M[rank], M[pivot] = M[pivot], M[rank]
        p = M[rank][col]
        for r in range(rank + 1, len(M)):
            a = M[r][col]
            M[r] = [(p * M[r][c] - a * M[rank][c]) // prev for c in range(n_cols)]
        prev = p
        rank += 1
        if rank == len(M):
            break
    return rank


@dataclass(frozen=True)
class RelationMatrix:
    rows: tuple[tuple[int, ...], ...]
    k: int

    @cached_property
    def lam(self) -> int:
        return bareiss_rank(self.rows)

    # λ(A); ``lambda`` itself is a keyword
    @property
    def lambda_(self) -> int:
        return self.lam


def _labelled(A) -> list:
    return list(A.elements) if isinstance(A, Set1D) else list(A.points)


def relation_matrix(A) -> RelationMatrix:
    elems = _labelled(A)
    return RelationMatrix(tuple(relation_rows(elems)), len(elems))


def freiman_dim(A) -> int:
    if A.k == 1:
        return 0
    return A.k - 1 - relation_matrix(A).lam


# ----------------------------------------------------------------------
# maps between sets
# ----------------------------------------------------------------------

def _key(v):
    if isinstance(v, (list, tuple)):
        return tuple(v)
    return v


@dataclass(frozen=True)
class PairingMap:
    pairs: tuple = field(default=())

    def __init__(self, pairs):
        if isinstance(pairs, dict):
            pairs = pairs.items()
        object.__setattr__(self, "pairs", tuple((_key(s), _key(t)) for s, t in pairs))

    @cached_property
    def mapping(self) -> dict:
        return dict(self.pairs)

    def __call__(self, a):
        return self.mapping[_key(a)]

    def inverse(self) -> "PairingMap":
        return PairingMap((t, s) for s, t in self.pairs)

    def tolist(self) -> list:
        def enc(v):
            return list(v) if isinstance(v, tuple) else v
        return [[enc(s), enc(t)] for s, t in self.pairs]

    @classmethod
    def from_function(cls, A, f) -> "PairingMap":
        return cls((a, f(a)) for a in A)


def _validate(A, B, phi: PairingMap) -> dict:
    m = phi.mapping
    missing = [a for a in A if a not in m]
    if missing:
        raise MapNotTotal(f"map is undefined on {missing[0]!r}", missing=missing)
    outside = [m[a] for a in A if m[a] not in B]
    if outside:
        raise MapTargetOutside(f"image {outside[0]!r} is not in the target set")
    return m


def _sum_images(A, m) -> dict:
    elems = list(A)
    images = defaultdict(set)
    for i, a in enumerate(elems):
        for b in elems[i:]:
            images[_add(a, b)].add(_add(m[a], m[b]))
    return images


def check_homomorphism(A, B, phi: PairingMap) -> bool:
    """True iff a1+a2 = a1'+a2' in A always forces equal image sums.

    Grouping pairs by their sum is equivalent to checking every quadruple.
    """
    m = _validate(A, B, phi)
    return all(len(s) == 1 for s in _sum_images(A, m).values())


def check_isomorphism(A, B, phi: PairingMap) -> bool:
    m = _validate(A, B, phi)
    if len(set(m[a] for a in A)) != A.k or A.k != len(B):
        return False
    images = _sum_images(A, m)
    if any(len(s) != 1 for s in images.values()):
        return False
    # induced map on 2A must be injective as well
    return len({next(iter(s)) for s in images.values()}) == len(images)


# ----------------------------------------------------------------------
# rational affine maps of the plane
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class RatAffineMap2D:
    """(x, y) -> (m11 x + m12 y + t1, m21 x + m22 y + t2), exact rationals."""

    m11: Fraction = Fraction(1)
    m12: Fraction = Fraction(0)
    m21: Fraction = Fraction(0)
    m22: Fraction = Fraction(1)
    t1: Fraction = Fraction(0)
    t2: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("m11", "m12", "m21", "m22", "t1", "t2"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def diag(cls, sx, sy) -> "RatAffineMap2D":
        return cls(m11=sx, m22=sy)

    @classmethod
    def projection(cls, m: int) -> "RatAffineMap2D":
        """Projection onto the line x = 0 along (1, m): (x, y) -> (0, y - m x)."""
        return cls(0, 0, -m, 1)

    @classmethod
    def integer(cls, matrix, translation=(0, 0)) -> "RatAffineMap2D":
        (a, b), (c, d) = matrix
        return cls(a, b, c, d, *translation)

    @property
    def det(self) -> Fraction:
        return self.m11 * self.m22 - self.m12 * self.m21

    @property
    def is_projection(self) -> bool:
        return self.det == 0

    @property
    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in
                   (self.m11, self.m12, self.m21, self.m22, self.t1, self.t2))

    @property
    def is_unimodular(self) -> bool:
        return self.is_integral and abs(self.det) == 1

    def __call__(self, p):
        x, y = p
        return (self.m11 * x + self.m12 * y + self.t1,
                self.m21 * x + self.m22 * y + self.t2)

    def then(self, other: "RatAffineMap2D") -> "RatAffineMap2D":
        """Composition: apply ``self`` first, then ``other``."""
        o = other
        return RatAffineMap2D(
            o.m11 * self.m11 + o.m12 * self.m21,
            o.m11 * self.m12 + o.m12 * self.m22,
            o.m21 * self.m11 + o.m22 * self.m21,
            o.m21 * self.m12 + o.m22 * self.m22,
            o.m11 * self.t1 + o.m12 * self.t2 + o.t1,
            o.m21 * self.t1 + o.m22 * self.t2 + o.t2,
        )

    def inverse(self) -> "RatAffineMap2D":
        d = self.det
        if d == 0:
            raise ZeroDivisionError("projection has no inverse")
        a, b, c, e = self.m22 / d, -self.m12 / d, -self.m21 / d, self.m11 / d
        return RatAffineMap2D(a, b, c, e, -(a * self.t1 + b * self.t2), -(c * self.t1 + e * self.t2))

    def todict(self) -> dict:
        return {k: str(getattr(self, k)) for k in ("m11", "m12", "m21", "m22", "t1", "t2")}


@dataclass(frozen=True)
class AffineImage:
    source: tuple
    points: tuple
    integral: bool

    def to_set2d(self) -> Set2D:
        if not self.integral:
            raise ValueError("image has non-integral points")
        return Set2D.from_unique((int(x), int(y)) for x, y in self.points)

    def y_values(self) -> list:
        return [y for _, y in self.points]

    def to_set1d(self) -> Set1D:
        """Read a projected image (all points on x = 0) as a set of integers."""
        if not self.integral or any(x != 0 for x, _ in self.points):
            raise ValueError("image is not an integral subset of the line x = 0")
        return Set1D.from_unique(int(y) for y in self.y_values())

    def pairing(self) -> PairingMap:
        def norm(p):
            return tuple(int(v) if v.denominator == 1 else v for v in p)
        return PairingMap((s, norm(t)) for s, t in zip(self.source, self.points))


def apply_affine(A, M: RatAffineMap2D) -> AffineImage:
    """Exact image of the points of A (a Set2D, an AffineImage or a point list)."""
    pts = A.points if isinstance(A, (Set2D, AffineImage)) else tuple(tuple(p) for p in A)
    source = A.source if isinstance(A, AffineImage) else pts
    image = tuple(M(p) for p in pts)
    integral = all(v.denominator == 1 for p in image for v in p)
    return AffineImage(tuple(source), image, integral)
