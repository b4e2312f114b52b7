import pytest
from hypothesis import given, strategies as st

from addvol import (
    ApproxGroupParams,
    ExtremalParams,
    L_m_formula,
    Set1D,
    a_m_formula,
    approx_compose_T,
    basic_extremal,
    compose_T,
    decompose_T,
    gen_approx_group,
    gen_extremal,
)
from addvol.errors import ConstructionFailed, ParamsOutOfRange, TOutOfRange
from addvol.extremal import T_range
from oracles import naive_doubling


def valid_triples(kmax):
    for k in range(3, kmax + 1):
        for c in range(2, k):
            for b in range(0, k - c):
                yield k, c, b


@pytest.mark.parametrize("args, T", [((11, 8, 2), 56), ((5, 4, 0), 12), ((7, 2, 0), 13)])
def test_compose_examples(args, T):
    assert compose_T(*args) == T


def test_compose_minimum_and_maximum():
    for k in range(3, 15):
        assert compose_T(k, 2, 0) == 2 * k - 1
        assert compose_T(k, k - 1, 0) == T_range(k)[1]


@pytest.mark.parametrize("k, T, cb", [(11, 56, (8, 2)), (5, 9, (2, 0)), (5, 11, (2, 2))])
def test_decompose_examples(k, T, cb):
    assert decompose_T(k, T) == cb


def test_overlap_gives_same_length():
    # T = 11 sits in both the c = 2 and the c = 3 segment for k = 5
    assert compose_T(5, 3, 0) == compose_T(5, 2, 2) == 11
    assert 2 ** (3 - 2) * (5 + 1 - 3 + 0) == a_m_formula(5, 11) == 6


@pytest.mark.parametrize("k, T", [(5, 8), (5, 13), (2, 3)])
def test_decompose_out_of_range(k, T):
    with pytest.raises(TOutOfRange):
        decompose_T(k, T)


@pytest.mark.parametrize("k, T, a", [(11, 56, 384), (5, 9, 4), (5, 12, 8)])
def test_a_m_examples(k, T, a):
    assert a_m_formula(k, T) == a


@pytest.mark.parametrize("k1, b, elems, T", [
    (5, 0, [0, 1, 2, 3, 4], 9),
    (5, 2, [0, 1, 2, 3, 6], 11),
    (4, 1, [0, 1, 2, 4], 8),
])
def test_basic_extremal(k1, b, elems, T):
    A = basic_extremal(k1, b)
    assert A.tolist() == elems and A.T == T == len(naive_doubling(elems))


def test_printed_eleven_element_set():
    A = gen_extremal(11, 8, 2, core=[0, 1, 2, 4, 6])
    assert A.tolist() == [0, 1, 2, 4, 8, 16, 32, 48, 96, 192, 384]
    assert A.T == 56 == len(naive_doubling(A))


def test_default_core_eleven_element_set():
    A = gen_extremal(11, 8, 2)
    assert A.tolist() == [0, 1, 2, 4, 8, 16, 24, 48, 96, 192, 384]
    assert A.T == 56 == len(naive_doubling(A)) and A.max == 384


def test_small_construction():
    A = gen_extremal(5, 3, 1)
    assert A.tolist() == [0, 1, 2, 4, 8] and A.T == 12 and A.max == 8


@pytest.mark.parametrize("k, c, b", list(valid_triples(14)))
def test_construction_hits_formula(k, c, b):
    A = gen_extremal(k, c, b)
    assert (A.k, len(naive_doubling(A)), A.max) == (k, compose_T(k, c, b), a_m_formula(k, compose_T(k, c, b)))


def test_bad_core_rejected():
    with pytest.raises(ConstructionFailed):
        gen_extremal(11, 8, 2, core=[0, 1, 2, 3, 5])


def test_params_validation():
    with pytest.raises(ParamsOutOfRange):
        ExtremalParams(5, 5, 0)
    with pytest.raises(ParamsOutOfRange):
        ExtremalParams(5, 3, 2)
    P = ExtremalParams(11, 8, 2)
    assert (P.k0, P.k1, P.k2, P.k3, P.p) == (6, 5, 3, 3, 48)


@given(st.integers(3, 40).flatmap(lambda k: st.tuples(st.just(k), st.integers(*T_range(k)))))
def test_decompose_compose_round_trip(kT):
    k, T = kT
    c, b = decompose_T(k, T)
    assert compose_T(k, c, b) == T


@pytest.mark.parametrize("kbar1, kbar2, b, elems, T, L", [
    (3, 1, 0, [-3, -1, 0, 1, 3], 11, 7),
    (5, 1, 2, [-9, -3, -1, 0, 1, 3, 9], 21, 19),
    (3, 0, 0, [-1, 0, 1], 5, 3),
])
def test_approx_group_examples(kbar1, kbar2, b, elems, T, L):
    P = ApproxGroupParams(kbar1, kbar2, b)
    A = gen_approx_group(P)
    assert A.tolist() == elems
    assert A.T == T == len(naive_doubling(elems))
    assert A.max - A.min + 1 == L == L_m_formula(P.k, P.c, P.b)


@pytest.mark.parametrize("args, L", [((5, 4, 0), 7), ((7, 4, 2), 19), ((9, 2, 3), 12)])
def test_L_m_examples(args, L):
    assert L_m_formula(*args) == L


@pytest.mark.parametrize("args, T", [((5, 4, 0), 11), ((7, 4, 2), 21), ((3, 2, 0), 5)])
def test_approx_T_examples(args, T):
    assert approx_compose_T(*args) == T


def test_approx_params_validation():
    for bad in [(4, 1, 0), (5, 1, 1), (5, -1, 0), (3, 1, 2)]:
        with pytest.raises(ParamsOutOfRange):
            ApproxGroupParams(*bad)


@pytest.mark.parametrize("kbar1", [3, 5, 7, 9])
@pytest.mark.parametrize("kbar2", [0, 1, 2, 3])
def test_approx_group_span_and_symmetry(kbar1, kbar2):
    for b in range(0, kbar1 - 2, 2):
        P = ApproxGroupParams(kbar1, kbar2, b)
        A = gen_approx_group(P)
        assert 0 in A and all(-a in A for a in A)
        assert A.max - A.min + 1 == L_m_formula(P.k, P.c, P.b)


def test_approx_group_doubling_for_one_outer_pair():
    # with at most one outer pair the closed form is exact
    for kbar1 in (3, 5, 7, 9):
        for kbar2 in (0, 1):
            for b in range(0, kbar1 - 2, 2):
                P = ApproxGroupParams(kbar1, kbar2, b)
                assert gen_approx_group(P).T == approx_compose_T(P.k, P.c, P.b)
