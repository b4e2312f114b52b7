import pytest
from hypothesis import assume, given, strategies as st

from addvol import Set1D, Set2D, bounding_box, check_isomorphism, freiman_dim, strip_normalize, volume_1d
from addvol.errors import Collinear
from addvol.geometry import convex_hull, hull_lattice_count, is_collinear, min_width_direction
from addvol.morphisms import apply_affine
from conftest import CONTRACTION_EXAMPLE, EXAMPLE_1, EXAMPLE_2, sets_2d
from oracles import pick_count, scipy_hull_count


def test_volume_1d_examples():
    assert volume_1d(Set1D([0, 1, 3])) == 4
    assert volume_1d(Set1D([-15, -10, -5, -4, -3, 0, 1, 2, 3, 9])) == 25
    final = [24, 12, 6, 3, 0, -24, -40, -56, -72, -120, -132, -138, -141, -144]
    assert volume_1d(Set1D(final)) == 169


@pytest.mark.parametrize("pts, count", [
    ([(0, 0), (1, 0), (0, 1), (1, 1)], 4),
    (EXAMPLE_1, 11),
    ([(0, 0), (2, 0), (0, 2)], 6),
    (CONTRACTION_EXAMPLE, 90),
])
def test_hull_counts(pts, count):
    assert hull_lattice_count(Set2D(pts)) == count == scipy_hull_count(pts)


def test_degenerate_hulls():
    assert hull_lattice_count(Set2D([(2, 3)])) == 1
    assert hull_lattice_count(Set2D([(0, 0), (2, 4), (1, 2)])) == 3
    assert is_collinear(Set2D([(0, 0), (2, 4), (1, 2)]))


@given(sets_2d)
def test_hull_count_matches_scipy_and_pick(A):
    assume(not is_collinear(A))
    n = hull_lattice_count(A)
    assert n == scipy_hull_count(A.points)
    assert n == pick_count(convex_hull(A.points))
    assert A.k <= n <= bounding_box(A).count


def test_strip_normalize_transposes_taller_set():
    S = strip_normalize(Set2D(EXAMPLE_2))
    assert (S.h1, S.h2) == (4, 3)


def test_strip_normalize_diagonal_example():
    S = strip_normalize(Set2D([(0, 0), (1, 1), (2, 2), (3, 3), (1, 2)]))
    assert S.set == Set2D([(0, 0), (1, 0), (2, 0), (3, 0), (1, 1)])
    assert S.h2 == 2
    assert S.transform((3, 3)) == (3, 0) and S.transform((1, 2)) == (1, 1)


def test_strip_normalize_square_unchanged():
    sq = Set2D([(0, 0), (1, 0), (0, 1), (1, 1)])
    S = strip_normalize(sq)
    assert S.set == sq and S.h1 == S.h2 == 2


def test_collinear_has_no_strip():
    with pytest.raises(Collinear):
        strip_normalize(Set2D([(0, 0), (1, 1), (2, 2)]))


@given(sets_2d)
def test_strip_form_invariants(A):
    assume(not is_collinear(A))
    S = strip_normalize(A)
    assert S.transform.is_unimodular
    img = apply_affine(A, S.transform)
    assert img.to_set2d() == S.set
    assert S.set.T == A.T and freiman_dim(S.set) == freiman_dim(A)
    assert check_isomorphism(A, S.set, img.pairing())
    assert S.box.a2 == 0 and S.h2 <= S.h1
    assert hull_lattice_count(S.set) == hull_lattice_count(A)
    assert all(A.points[i] == S.pull_back(img.points[i]) for i in range(A.k))


@given(sets_2d)
def test_min_width_is_minimal(A):
    assume(not is_collinear(A))
    p, q = min_width_direction(A, 6)

    def width(f):
        vals = [f[0] * x + f[1] * y for x, y in A]
        return max(vals) - min(vals) + 1

    best = width((p, q))
    for a in range(-6, 7):
        for b in range(-6, 7):
            if (a, b) != (0, 0):
                assert width((a, b)) >= best
