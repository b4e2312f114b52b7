import pytest
from hypothesis import settings
from hypothesis import strategies as st

from addvol import Set1D, Set2D

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

EXAMPLE_1 = [(-1, 3), (0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (1, 3), (2, 2), (3, 3)]
EXAMPLE_2 = [(0, 0), (0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2), (2, 3)]
GAP_EXAMPLE = [(0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (2, 2), (3, 2), (3, 3), (4, 2), (5, 2)]
CONTRACTION_EXAMPLE = [(0, 0), (0, 1), (0, 2), (0, 4), (0, 8), (3, 8), (4, 8), (5, 8), (6, 8),
                       (9, 8), (9, 4), (9, 2), (9, 1), (9, 0)]


@pytest.fixture
def ex1():
    return Set2D(EXAMPLE_1)


@pytest.fixture
def ex2():
    return Set2D(EXAMPLE_2)


@pytest.fixture
def gap_ex():
    return Set2D(GAP_EXAMPLE)


@pytest.fixture
def contraction_ex():
    return Set2D(CONTRACTION_EXAMPLE)


ints_1d = st.lists(st.integers(-40, 40), min_size=1, max_size=9, unique=True)
points_2d = st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=1, max_size=8, unique=True)
sets_1d = ints_1d.map(Set1D)
sets_2d = points_2d.map(Set2D)
