"""Exact symbolic engine for twist-deformed smash products, their star
products, and the two bialgebroid structures they carry."""

from .scalars import GaussRational, NonInvertibleError, TruncSeries
from .ncpoly import (
    COORDINATE,
    Generator,
    MOMENTUM,
    NCPoly,
    RewriteSystem,
    SYMMETRY,
    normal_form,
)
from .hopf import (
    BialgebraPresentation,
    CoproductMap,
    InvalidTwistError,
    Twist,
    check_cocycle,
    check_quasitriangular,
    classical_r_extract,
    r_matrix_from_twist,
    twist_from_exponent,
    twisted_coproduct,
    trivial_twist,
)
from .modalg import (
    PolyCoord,
    RepData,
    StarProduct,
    act,
    check_braided_commutativity,
    check_module_algebra,
    coaction,
    star_commutator_table,
)
from .smash import (
    SmashAlgebra,
    SmashElem,
    SmashProduct,
    canonical_action,
    mul_twisted,
    mul_undeformed,
    phi,
    phi_inv,
    verify_phi_homomorphism,
)
from .algebroid import (
    Bialgebroid,
    BrokenAnchorError,
    ShiftedTwist,
    Tensor3OverA,
    TensorOverA,
    anchor_action,
    bm_bialgebroid,
    bm_bialgebroid_twisted,
    check_bialgebroid_axioms,
    check_qt_shifted,
    shift_rmatrix,
    shift_twist,
    tensor_over_A_normalize,
    verify_theorem,
    xu_twist,
)
from .registry import (
    ExamplePreset,
    InvalidPresetError,
    PRESET_NAMES,
    Problem,
    materialize,
    preset,
    preset_to_config,
    validate,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
