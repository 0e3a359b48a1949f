"""Exact computations with Suslin matrices, elementary Spin groups, the
Vaserstein symbol and composition laws on unimodular rows."""

from .errors import (
    BudgetExceededError,
    DescriptorError,
    InconsistencyError,
    NotEnumerableError,
    PreconditionError,
    RingMismatchError,
    SuslinForgeError,
)
from .rings import ZZ, Integers, IntegersMod, Poly, PolynomialRing, Ring, RingValue, parse_ring
from .matrix import MatrixR, mat_det
from .suslin import SpherePoint, basis_unit, decode_suslin, j_matrix, star, suslin, suslin_bar, suslin_matrix, suslin_pair
from .clifford import phi_embed, phi_matrix, q_form, bilinear
from .epin import (
    EpinGenerator,
    act_on_point,
    closed_form_action,
    elem_generator,
    eo_generator,
    epin_matrix,
    extract_sigma,
    hyperbolic_embed,
    transitive_witness,
)
from .orbits import OrbitPartition, BijectionReport, bijection_check, enumerate_sphere, enumerate_um, orbit_partition
from .vaserstein import pfaffian, psi, perp, transport_action, vaserstein_matrix, sp4_fixer_check
from .composition import AlgElement, ZMatrix, compose, compose_plane, vdk_compose, z_matrix, octonion_L

__version__ = "0.1.0"
