from itertools import combinations

import pytest

from addvol import (
    SearchBudget,
    Set1D,
    Set2D,
    brute_a_m,
    conjecture_scan,
    exists_isomorphism,
    min_volume_search,
    normalize,
    project,
)
from addvol.geometry import volume_1d
from addvol.errors import BudgetExceeded, NotFound, ParamsOutOfRange
from addvol.morphisms import check_isomorphism, freiman_dim
from addvol.search import DimNotOne, extremal_witness, min_hull_volume_search, normal_sets
from conftest import EXAMPLE_1
from oracles import naive_doubling, naive_is_iso, sympy_dim


def brute_sets(k, max_len, T):
    """Plain itertools enumeration of normal-form sets, the reference for the pruned DFS."""
    from math import gcd
    from functools import reduce
    out = []
    for rest in combinations(range(1, max_len + 1), k - 1):
        A = (0,) + rest
        if reduce(gcd, A, 0) == 1 and len(naive_doubling(A)) == T:
            out.append(A)
    return out


@pytest.mark.parametrize("k, max_len, T", [(4, 12, 8), (5, 12, 12), (5, 10, 11), (4, 9, 10)])
def test_normal_sets_match_itertools(k, max_len, T):
    found, _ = normal_sets(k, max_len, T=T)
    assert sorted(found) == brute_sets(k, max_len, T)


def test_parallel_enumeration_is_identical():
    serial, _ = normal_sets(5, 14, T=11)
    parallel, _ = normal_sets(5, 14, T=11, workers=2)
    assert serial == parallel


@pytest.mark.parametrize("k, T, a", [(5, 9, 4), (5, 10, 5), (5, 12, 8)])
def test_brute_a_m_examples(k, T, a):
    assert brute_a_m(k, T) == a


def test_brute_a_m_short_range():
    assert brute_a_m(5, 12, SearchBudget(max_length=10)) == 8


def test_brute_a_m_independent_reference():
    best = max(A[-1] for A in brute_sets(5, 12, 12) if sympy_dim(list(A)) == 1)
    assert best == brute_a_m(5, 12) == 8


def test_witness_attains_length():
    W = extremal_witness(5, 12)
    assert W.max == 8 and W.T == 12 and freiman_dim(W) == 1


def test_search_limits():
    with pytest.raises(BudgetExceeded):
        brute_a_m(9, 17)
    with pytest.raises(ParamsOutOfRange):
        brute_a_m(2, 3)
    with pytest.raises(BudgetExceeded):
        brute_a_m(6, 14, SearchBudget(max_nodes=50))
    with pytest.raises(NotFound):
        brute_a_m(5, 15, SearchBudget(max_length=8))


def test_min_volume_examples():
    assert min_volume_search(Set1D([0, 1, 2]))[0] == 3
    length, W = min_volume_search(Set1D([0, 1, 2, 4]))
    assert length == 5 and W.T == 8


def test_min_volume_of_rigid_sets():
    # rank k-2 relations fix a set up to a rational affine map, so no image is shorter
    for rest in combinations(range(1, 11), 3):
        A = Set1D((0,) + rest)
        if freiman_dim(A) != 1:
            continue
        length, W = min_volume_search(A)
        assert length == volume_1d(A) == W.max + 1
        phi = exists_isomorphism(A, W)
        assert phi is not None and naive_is_iso(list(A), [phi(a) for a in A])


def test_min_volume_requires_dimension_one():
    with pytest.raises(DimNotOne):
        min_volume_search(Set1D([0, 1, 3, 7]))


@pytest.mark.slow
def test_example_one_image_is_already_shortest():
    P = normalize(project(Set2D(EXAMPLE_1), 6))
    length, W = min_volume_search(P, SearchBudget(max_length=64, max_k=10))
    assert length == 25 and W == P


def test_isomorphism_examples():
    phi = exists_isomorphism(Set1D([0, 1, 2]), Set1D([5, 7, 9]))
    assert phi.mapping == {0: 5, 1: 7, 2: 9}
    assert exists_isomorphism(Set1D([0, 1, 2, 4]), Set1D([0, 1, 2, 3])) is None
    A, B = Set1D([0, 1, 3, 7]), Set1D([0, 1, 5, 11])
    phi = exists_isomorphism(A, B)
    assert phi is not None and check_isomorphism(A, B, phi)


def test_isomorphism_search_exhaustive_against_permutations():
    from itertools import permutations
    A = Set1D([0, 1, 3, 4, 9])
    for B in (Set1D([0, 5, 6, 8, 9]), Set1D([0, 1, 2, 5, 6]), Set1D([0, 2, 3, 5, 9])):
        expected = any(naive_is_iso(list(A), list(p)) for p in permutations(B))
        assert (exists_isomorphism(A, B) is not None) == expected


def test_planar_volume_search():
    A = Set2D([(0, 0), (1, 0), (0, 1), (3, 3)])
    v, W = min_hull_volume_search(A)
    assert v <= 16 and W.T == A.T


def test_scan_rows_shape():
    rows = conjecture_scan(5, band="basic")
    assert [(r["k"], r["T"]) for r in rows] == [(3, 5), (4, 7), (4, 8), (5, 9), (5, 10), (5, 11)]
    assert all(r["match"] for r in rows)
    with pytest.raises(ParamsOutOfRange):
        conjecture_scan(4, band="nope")


def test_scan_progress_callback():
    seen = []
    conjecture_scan(4, band="basic", progress=seen.append)
    assert len(seen) == 3
