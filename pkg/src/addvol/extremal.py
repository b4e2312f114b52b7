"""Extremal sets for given (k, T) and the symmetric approximate-group construction.

Parametrisation: T = c k - (c^2 + c - 4)/2 + b with 2 <= c <= k-1 and
0 <= b <= k-c-1. The conjectured extremal length is a_m = 2^(c-2) (k+1-c+b);
the generators below build sets attaining it, which gives the lower bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ConstructionFailed, ParamsOutOfRange, TOutOfRange
from .sets import Set1D

APPROX_T_NOTE = ("T = c k - (3c^2 - 2c - 4)/4 + b: denominator 4, confirmed by "
                 "direct doubling; the /2 form does not match the construction")


def _check_cb(k: int, c: int, b: int) -> None:
    if not (2 <= c <= k - 1):
        raise ParamsOutOfRange(f"need 2 <= c <= k-1, got k={k}, c={c}")
    if not (0 <= b <= k - c - 1):
        raise ParamsOutOfRange(f"need 0 <= b <= k-c-1, got k={k}, c={c}, b={b}")


def compose_T(k: int, c: int, b: int) -> int:
    _check_cb(k, c, b)
    return c * k - (c * c + c - 4) // 2 + b


def T_range(k: int) -> tuple[int, int]:
    return 2 * k - 1, (k * k - k) // 2 + 2


def decompose_T(k: int, T: int) -> tuple[int, int]:
    """Canonical (c, b) for T; segment overlaps resolve to the smaller c."""
    lo, hi = T_range(k)
    if k < 3 or not (lo <= T <= hi):
        raise TOutOfRange(f"T={T} outside [{lo}, {hi}] for k={k}")
    for c in range(2, k):
        b = T - (c * k - (c * c + c - 4) // 2)
        if 0 <= b <= k - c - 1:
            return c, b
    raise TOutOfRange(f"no (c, b) for k={k}, T={T}")  # unreachable for k >= 3


def a_m_formula(k: int, T: int) -> int:
    c, b = decompose_T(k, T)
    return 2 ** (c - 2) * (k + 1 - c + b)


@dataclass(frozen=True)
class ExtremalParams:
    k: int
    c: int
    b: int

    def __post_init__(self):
        _check_cb(self.k, self.c, self.b)

    @property
    def k0(self) -> int:
        return self.c - 2

    @property
    def k1(self) -> int:
        return self.k - self.k0

    @property
    def k2(self) -> int:
        return (self.k0 + 1) // 2

    @property
    def k3(self) -> int:
        return self.k0 // 2

    @property
    def p(self) -> int:
        return 2 ** self.k2 * (self.k1 - 1 + self.b)

    @property
    def T(self) -> int:
        return compose_T(self.k, self.c, self.b)

    @property
    def a_m(self) -> int:
        return 2 ** (self.c - 2) * (self.k + 1 - self.c + self.b)

    def todict(self) -> dict:
        return {"k": self.k, "c": self.c, "b": self.b, "k0": self.k0, "k1": self.k1,
                "k2": self.k2, "k3": self.k3, "p": self.p}


def basic_extremal(k1: int, b: int) -> Set1D:
    """{0, 1, ..., k1-2} together with the far point k1-1+b."""
    if k1 < 3 or not (0 <= b <= k1 - 3):
        raise ParamsOutOfRange(f"need k1 >= 3 and 0 <= b <= k1-3, got k1={k1}, b={b}")
    A = Set1D(list(range(k1 - 1)) + [k1 - 1 + b])
    if A.T != 2 * k1 - 1 + b or A.max != k1 - 1 + b:
        raise ConstructionFailed("segment-plus-point core has the wrong doubling")
    return A


def _check_core(core: Set1D, k1: int, b: int) -> None:
    if core.k != k1 or core.min != 0 or core.max != k1 - 1 + b or core.T != 2 * k1 - 1 + b:
        raise ConstructionFailed(
            f"core {core.tolist()} must have k={k1}, span [0, {k1 - 1 + b}] and T={2 * k1 - 1 + b}")


def gen_extremal(k: int, c: int, b: int, core: Iterable[int] | None = None,
                 split: tuple[int, int] | None = None) -> Set1D:
    """{0} u {1, 2, ..., 2^(k2-1)} u 2^k2 * core u 2p * {1, 2, ..., 2^(k3-1)}.

    ``core`` defaults to ``basic_extremal(k1, b)``; ``split`` overrides (k2, k3).
    """
    P = ExtremalParams(k, c, b)
    k2, k3 = split if split is not None else (P.k2, P.k3)
    if k2 + k3 != P.k0 or min(k2, k3) < 0:
        raise ParamsOutOfRange(f"split {k2}+{k3} must add up to k0={P.k0}")
    core_set = basic_extremal(P.k1, b) if core is None else Set1D(core)
    _check_core(core_set, P.k1, b)
    p = 2 ** k2 * (P.k1 - 1 + b)
    elems = {0}
    elems.update(2 ** i for i in range(k2))
    elems.update(2 ** k2 * a for a in core_set)
    elems.update(2 * p * 2 ** i for i in range(k3))
    A = Set1D(elems)
    if A.k != k or A.T != P.T or A.max != P.a_m:
        raise ConstructionFailed(
            f"built k={A.k}, T={A.T}, max={A.max}; expected k={k}, T={P.T}, max={P.a_m}")
    return A


@dataclass(frozen=True)
class ApproxGroupParams:
    kbar1: int
    kbar2: int
    b: int

    def __post_init__(self):
        if self.kbar1 < 3 or self.kbar1 % 2 == 0:
            raise ParamsOutOfRange(f"kbar1 must be odd and >= 3, got {self.kbar1}")
        if self.kbar2 < 0:
            raise ParamsOutOfRange(f"kbar2 must be >= 0, got {self.kbar2}")
        if self.b % 2 or not (0 <= self.b <= self.kbar1 - 3):
            raise ParamsOutOfRange(f"b must be even with 0 <= b <= kbar1-3, got {self.b}")

    @property
    def k(self) -> int:
        return self.kbar1 + 2 * self.kbar2

    @property
    def c(self) -> int:
        return 2 * self.kbar2 + 2

    @property
    def p(self) -> int:
        return (self.kbar1 - 1 + self.b) // 2

    def todict(self) -> dict:
        return {"kbar1": self.kbar1, "kbar2": self.kbar2, "b": self.b,
                "k": self.k, "c": self.c, "p": self.p}


def _check_even_cb(k: int, c: int, b: int) -> None:
    if c % 2:
        raise ParamsOutOfRange(f"c must be even, got {c}")
    _check_cb(k, c, b)


def L_m_formula(k: int, c: int, b: int) -> int:
    _check_even_cb(k, c, b)
    return 3 ** (c // 2 - 1) * (k - c + b + 1) + 1


def approx_compose_T(k: int, c: int, b: int) -> int:
    _check_even_cb(k, c, b)
    return c * k - (3 * c * c - 2 * c - 4) // 4 + b


def gen_approx_group(params: ApproxGroupParams) -> Set1D:
    """Symmetric core [-p] u [-(kbar1-3)/2, (kbar1-3)/2] u [p], then +-3p, +-9p, ..."""
    P = params
    q = (P.kbar1 - 3) // 2
    core = Set1D([-P.p, *range(-q, q + 1), P.p])
    elems = set(core)
    for j in range(1, P.kbar2 + 1):
        elems.update((3 ** j * P.p, -(3 ** j) * P.p))
    A = Set1D(elems)
    if core.T != 2 * P.kbar1 - 1 + P.b:
        raise ConstructionFailed(f"core doubling {core.T} != {2 * P.kbar1 - 1 + P.b}")
    if 0 not in A or any(-a not in A for a in A) or A.k != P.k:
        raise ConstructionFailed("set is not symmetric with 0 and k elements")
    return A
