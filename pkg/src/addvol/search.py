"""Exhaustive search oracles.

Every search here is exhaustive within its budget: it either returns an exact
answer for the scanned range or raises ``BudgetExceeded``. Nothing is sampled.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd

from .errors import BudgetExceeded, InvalidInput, NotFound, ParamsOutOfRange
from .extremal import a_m_formula, decompose_T, T_range
from .geometry import hull_lattice_count, is_collinear, strip_normalize, volume_1d
from .morphisms import PairingMap, freiman_dim
from .sets import Set1D, Set2D, _add, doubling_values, normalize


@dataclass(frozen=True)
class SearchBudget:
    max_length: int = 64
    max_k: int = 7
    max_nodes: int = 10 ** 8

    def __post_init__(self):
        if min(self.max_length, self.max_k, self.max_nodes) <= 0:
            raise ParamsOutOfRange("search budget fields must be positive")


DEFAULT_BUDGET = SearchBudget()


class DimNotOne(InvalidInput):
    code = "DIM_NOT_ONE"
    exit_code = 3


class _Counter:
    __slots__ = ("n", "limit")

    def __init__(self, limit: int):
        self.n = 0
        self.limit = limit

    def tick(self):
        self.n += 1
        if self.n > self.limit:
            raise BudgetExceeded(f"search exceeded {self.limit} nodes")


# ----------------------------------------------------------------------
# enumeration of normal-form sets
# ----------------------------------------------------------------------

def _extend(elems, mask, sums, k, T, max_len, counter, out, last=None):
    """Depth-first over ascending supersets of ``elems``; sums is the 2A bitmask.

    Adding r more elements above the current maximum creates at least 2r new
    sums, which is the pruning bound.
    """
    counter.tick()
    j = len(elems)
    if j == k:
        if T is not None and sums.bit_count() != T:
            return
        if reduce(gcd, elems, 0) == 1:
            out.append(tuple(elems))
        return
    remaining = k - j
    if T is not None and sums.bit_count() + 2 * remaining > T:
        return
    top = max_len - remaining + 1
    lo = elems[-1] + 1
    if last is not None:
        if remaining == 1:
            lo = top = last
        else:
            top = min(top, last - remaining + 1)
    for x in range(lo, top + 1):
        new_sums = sums | (mask << x) | (1 << (2 * x))
        if T is not None and new_sums.bit_count() + 2 * (remaining - 1) > T:
            continue
        elems.append(x)
        _extend(elems, mask | (1 << x), new_sums, k, T, max_len, counter, out, last)
        elems.pop()


def _partition(a1, k, T, max_len, max_nodes, last=None):
    counter = _Counter(max_nodes)
    out: list[tuple[int, ...]] = []
    mask = 1 | (1 << a1)
    sums = 1 | (1 << a1) | (1 << (2 * a1))
    if k == 2:
        if (last is None or a1 == last) and (T is None or T == 3) and a1 == 1:
            out.append((0, a1))
        return out, 1
    _extend([0, a1], mask, sums, k, T, max_len, counter, out, last)
    return out, counter.n


def normal_sets(k: int, max_len: int, T: int | None = None, last: int | None = None,
                budget: SearchBudget = DEFAULT_BUDGET, workers: int = 1):
    """All normal-form k-sets inside [0, max_len] (optionally with |2A| = T, max = last).

    The search space is split by the second-smallest element; with
    ``workers > 1`` the parts run in separate processes and are merged in order.
    Returns (sets, nodes visited).
    """
    if k < 2:
        raise ParamsOutOfRange("k must be at least 2")
    hi = max_len - k + 2 if last is None else min(max_len, last) - k + 2
    parts = list(range(1, hi + 1))
    args = [(a1, k, T, max_len, budget.max_nodes, last) for a1 in parts]
    if workers > 1 and len(parts) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_partition, *zip(*args)))
    else:
        results = [_partition(*a) for a in args]
    sets, nodes = [], 0
    for found, n in results:
        sets.extend(found)
        nodes += n
        if nodes > budget.max_nodes:
            raise BudgetExceeded(f"search exceeded {budget.max_nodes} nodes")
    return sets, nodes


def brute_a_m(k: int, T: int, budget: SearchBudget = DEFAULT_BUDGET, workers: int = 1) -> int:
    """Largest a_{k-1} over dimension-1 normal-form k-sets in [0, max_length] with |2A| = T."""
    if k < 3:
        raise ParamsOutOfRange("brute_a_m needs k >= 3")
    if k > budget.max_k:
        raise BudgetExceeded(f"k={k} exceeds budget max_k={budget.max_k}")
    return max(_dim_one_sets(k, T, budget, workers))[-1]


def _dim_one_sets(k, T, budget, workers=1):
    sets, _ = normal_sets(k, budget.max_length, T=T, budget=budget, workers=workers)
    # below 3k-3 every set has dimension 1, so the rank test only matters above
    sets = [s for s in sets if T < 3 * k - 3 or freiman_dim(Set1D(s)) == 1]
    if not sets:
        raise NotFound(f"no dimension-1 normal-form set with k={k}, T={T} "
                       f"inside [0, {budget.max_length}]")
    return sorted(sets, key=lambda s: (s[-1], s))


def extremal_witness(k: int, T: int, budget: SearchBudget = DEFAULT_BUDGET) -> Set1D:
    """A lexicographically largest dimension-1 set attaining ``brute_a_m``."""
    return Set1D(_dim_one_sets(k, T, budget)[-1])


# ----------------------------------------------------------------------
# isomorphism search
# ----------------------------------------------------------------------

def exists_isomorphism(A, B, budget: SearchBudget = DEFAULT_BUDGET) -> PairingMap | None:
    """A Freiman isomorphism A -> B found by backtracking, or None if there is none."""
    if A.k != B.k or A.T != B.T:
        return None
    a = list(A)
    b = list(B)
    fwd: dict = {}
    bwd: dict = {}
    image: list = []
    used = [False] * len(b)
    counter = _Counter(budget.max_nodes)

    def assign(i):
        if i == len(a):
            return True
        for t, cand in enumerate(b):
            if used[t]:
                continue
            counter.tick()
            added = []
            ok = True
            for j in range(i + 1):
                s = _add(a[i], a[j])
                v = _add(cand, image[j] if j < i else cand)
                fs, bv = fwd.get(s), bwd.get(v)
                if fs is None and bv is None:
                    fwd[s] = v
                    bwd[v] = s
                    added.append((s, v))
                elif fs != v or bv != s:
                    ok = False
                    break
            if ok:
                used[t] = True
                image.append(cand)
                if assign(i + 1):
                    return True
                image.pop()
                used[t] = False
            for s, v in added:
                del fwd[s]
                del bwd[v]
        return False

    if assign(0):
        return PairingMap(zip(a, image))
    return None


def min_volume_search(A: Set1D, budget: SearchBudget = DEFAULT_BUDGET):
    """Shortest normal-form image of A: returns (length, witness set).

    Lengths below ``volume_1d(A)`` are scanned exhaustively; if none works the
    normalized input itself is the witness.
    """
    if A.k > budget.max_k:
        raise BudgetExceeded(f"k={A.k} exceeds budget max_k={budget.max_k}")
    if A.k > 1 and freiman_dim(A) != 1:
        raise DimNotOne("minimal-length search expects a set of Freiman dimension 1")
    upper = volume_1d(A)
    if A.k <= 2:
        return upper, normalize(A)
    nodes = 0
    for last in range(A.k - 1, min(upper - 1, budget.max_length + 1)):
        sets, n = normal_sets(A.k, last, T=A.T, last=last,
                              budget=SearchBudget(budget.max_length, budget.max_k,
                                                  budget.max_nodes - nodes))
        nodes += n
        for s in sets:
            B = Set1D(s)
            if exists_isomorphism(A, B, budget) is not None:
                return last + 1, B
    return upper, normalize(A)


def min_hull_volume_search(A: Set2D, budget: SearchBudget = DEFAULT_BUDGET):
    """Smallest hull lattice count over isomorphic planar images in a bounded box.

    Only for k <= 5: candidates are all k-point sets in an n x n box, n being
    the longer side of the strip form of A. The result is an upper bound for
    the additive volume; returns (count, witness).
    """
    if A.k > min(5, budget.max_k):
        raise BudgetExceeded("planar volume search is limited to k <= 5")
    best = (hull_lattice_count(A), A)
    if is_collinear(A):
        return best
    S = strip_normalize(A)
    n = max(S.h1, S.h2)
    grid = [(x, y) for x in range(n) for y in range(n)]
    target_T = A.T
    counter = _Counter(budget.max_nodes)
    for pts in combinations(grid, A.k):
        counter.tick()
        if not any(x == 0 for x, _ in pts) or not any(y == 0 for _, y in pts):
            continue
        if len(doubling_values(pts)) != target_T:
            continue
        B = Set2D(pts)
        v = hull_lattice_count(B)
        if v >= best[0] or is_collinear(B):
            continue
        if exists_isomorphism(A, B, budget) is not None:
            best = (v, B)
    return best


# ----------------------------------------------------------------------
# conjecture table
# ----------------------------------------------------------------------

BANDS = ("basic", "c3")


def band_T_values(k: int, band: str) -> range:
    lo, hi = T_range(k)
    if band == "basic":
        top = 3 * k - 4
    elif band == "c3":
        top = max(3 * k - 4, 4 * k - 9)
    else:
        raise ParamsOutOfRange(f"unknown band {band!r}; choose from {BANDS}")
    return range(lo, min(top, hi) + 1)


def conjecture_scan(kmax: int, band: str = "c3", kmin: int = 3,
                    budget: SearchBudget = DEFAULT_BUDGET, workers: int = 1,
                    progress=None) -> list[dict]:
    """Tabulate brute-force a_m against the closed formula; mismatches are reported, not raised."""
    rows = []
    for k in range(kmin, kmax + 1):
        for T in band_T_values(k, band):
            c, b = decompose_T(k, T)
            formula = a_m_formula(k, T)
            try:
                brute = brute_a_m(k, T, budget, workers)
            except NotFound:
                brute = None
            rows.append({"k": k, "T": T, "c": c, "b": b, "formula_a_m": formula,
                         "brute_a_m": brute, "match": brute == formula})
            if progress is not None:
                progress(rows[-1])
    return rows

