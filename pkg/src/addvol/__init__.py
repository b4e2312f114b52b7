"""Exact additive-combinatorics toolkit: sumsets, Freiman dimension, certified
planar-to-line reduction, extremal-set generators and brute-force oracles."""

from .errors import AddvolError
from .extremal import (
    ApproxGroupParams,
    ExtremalParams,
    L_m_formula,
    a_m_formula,
    approx_compose_T,
    basic_extremal,
    compose_T,
    decompose_T,
    gen_approx_group,
    gen_extremal,
)
from .geometry import StripForm, hull_lattice_count, strip_normalize, volume_1d
from .morphisms import (
    PairingMap,
    RatAffineMap2D,
    RelationMatrix,
    apply_affine,
    check_homomorphism,
    check_isomorphism,
    freiman_dim,
    relation_matrix,
    relation_vector,
)
from .reduction import (
    DeltaProfile,
    ProjectionSpec,
    ReductionReport,
    column_deltas,
    gap_strips,
    project,
    projection_vector,
    reduce_dim,
)
from .search import (
    SearchBudget,
    brute_a_m,
    conjecture_scan,
    exists_isomorphism,
    min_volume_search,
)
from .sets import BoundingBox, Set1D, Set2D, bounding_box, normalize, sumset

__version__ = "0.1.0"
