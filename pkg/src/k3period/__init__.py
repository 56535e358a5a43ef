"""Exact computations on the K3 lattice and its space of positive 3-planes."""
from .ade import ADEComponent, ade_classify
from .errors import K3Error
from .grassmann import (
    PlaneDistance,
    PositivePlane,
    apply,
    chart_dimension,
    distance,
    oriented_equal,
    orthonormalize,
    p0,
    plane_from_basis,
    planes_equal,
)
from .isometry import (
    ComponentClass,
    FixedPlaneCertificate,
    Isometry,
    certify_generators,
    classify_component,
    compose,
    fixed_plane,
    inverse,
    is_isometry,
    orbit,
    reflection,
)
from .lattice import (
    Lattice,
    LatticeVector,
    build_e8,
    build_u,
    direct_sum,
    inner,
    is_root,
    k3_e,
    k3_f,
    k3_lattice,
)
from .linalg import det_exact, hnf, int_kernel, inv_unimodular, signature, snf
from .period import OrthoSublattice, PeriodVerdict, ortho_sublattice, period_check
from .reduction import EnumerationStats, enumerate_norm, lll_reduce

__version__ = "0.1.0"
