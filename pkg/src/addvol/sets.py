"""Finite sets of integers and of planar lattice points.

Both set types are immutable; ``k`` is the cardinality and ``T`` the size of
the doubling ``A + A``, computed on first access.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd
from typing import Iterable

from .errors import DuplicateElement, EmptySet

Point = tuple[int, int]


def _distinct_sorted(items: list, what: str) -> tuple:
    if not items:
        raise EmptySet(f"a {what} needs at least one element")
    out = sorted(items)
    for prev, cur in zip(out, out[1:]):
        if prev == cur:
            raise DuplicateElement(f"duplicate element {cur!r}", element=cur)
    return tuple(out)


@dataclass(frozen=True)
class Set1D:
    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]):
        items = [int(e) for e in elements]
        object.__setattr__(self, "elements", _distinct_sorted(items, "Set1D"))

    @classmethod
    def from_unique(cls, elements: Iterable[int]) -> "Set1D":
        """Build from an iterable that may contain repeats (they are merged)."""
        return cls(set(elements))

    @property
    def k(self) -> int:
        return len(self.elements)

    @cached_property
    def T(self) -> int:
        return len(doubling_values(self.elements))

    @property
    def min(self) -> int:
        return self.elements[0]

    @property
    def max(self) -> int:
        return self.elements[-1]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._lookup

    @cached_property
    def _lookup(self) -> frozenset:
        return frozenset(self.elements)

    def tolist(self) -> list[int]:
        return list(self.elements)

    def __repr__(self):
        return f"Set1D({list(self.elements)})"


@dataclass(frozen=True)
class Set2D:
    points: tuple[Point, ...]

    def __init__(self, points: Iterable[Iterable[int]]):
        items = []
        for p in points:
            x, y = p
            items.append((int(x), int(y)))
        object.__setattr__(self, "points", _distinct_sorted(items, "Set2D"))

    @classmethod
    def from_unique(cls, points) -> "Set2D":
        return cls(set(tuple(p) for p in points))

    @property
    def k(self) -> int:
        return len(self.points)

    @cached_property
    def T(self) -> int:
        return len(doubling_values(self.points))

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._lookup

    @cached_property
    def _lookup(self) -> frozenset:
        return frozenset(self.points)

    def tolist(self) -> list[list[int]]:
        return [list(p) for p in self.points]

    def column(self, x: int) -> list[int]:
        return sorted(y for px, y in self.points if px == x)

    def __repr__(self):
        return f"Set2D({self.tolist()})"


@dataclass(frozen=True)
class BoundingBox:
    """Tight box ``[a1, a1+h1-1] x [a2, a2+h2-1]``; h1, h2 count lattice columns/rows."""

    a1: int
    a2: int
    h1: int
    h2: int

    @property
    def x_max(self) -> int:
        return self.a1 + self.h1 - 1

    @property
    def y_max(self) -> int:
        return self.a2 + self.h2 - 1

    @property
    def count(self) -> int:
        return self.h1 * self.h2

    def __contains__(self, p) -> bool:
        x, y = p
        return self.a1 <= x <= self.x_max and self.a2 <= y <= self.y_max

    def lattice_points(self):
        for x in range(self.a1, self.x_max + 1):
            for y in range(self.a2, self.y_max + 1):
                yield (x, y)


def _add(a, b):
    if isinstance(a, tuple):
        return (a[0] + b[0], a[1] + b[1])
    return a + b


def doubling_values(elements) -> set:
    elements = list(elements)
    return {_add(a, b) for i, a in enumerate(elements) for b in elements[i:]}


def sumset(A, B):
    """A + B for two sets of the same kind."""
    if isinstance(A, Set1D) and isinstance(B, Set1D):
        return Set1D.from_unique(a + b for a in A for b in B)
    if isinstance(A, Set2D) and isinstance(B, Set2D):
        return Set2D.from_unique(_add(a, b) for a in A for b in B)
    raise TypeError("sumset needs two sets of the same kind")


def doubling(A):
    return sumset(A, A)


def normalize(A: Set1D) -> Set1D:
    """Translate the minimum to 0 and divide out the gcd of the elements."""
    lo = A.min
    g = reduce(gcd, (a - lo for a in A), 0) or 1
    return Set1D((a - lo) // g for a in A)


def bounding_box(A: Set2D) -> BoundingBox:
    xs = [p[0] for p in A]
    ys = [p[1] for p in A]
    return BoundingBox(min(xs), min(ys), max(xs) - min(xs) + 1, max(ys) - min(ys) + 1)


def is_arithmetic_progression(A: Set1D) -> bool:
    d = {b - a for a, b in zip(A.elements, A.elements[1:])}
    return len(d) <= 1
