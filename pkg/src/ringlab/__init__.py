"""ringlab: exhaustive desk-scale classification of finite rings.

Builds finite rings from Cayley-table specs, classifies every pair in R^2
(unimodular, admissible, free, torsion, outlier), enumerates right ideals
and GL2(R) orbits, and replays the whole claim suite via `ringlab verify`.
"""

from .core import (
    FiniteRing,
    RingSpec,
    build_ring,
    check_condition_F,
    direct_product,
    is_commutative,
    is_dedekind_finite,
    is_left_zero_divisor,
    is_local,
    is_right_zero_divisor,
    opposite_ring,
    units,
)
from .ideals import (
    RightIdealSet,
    all_right_ideals,
    is_principal,
    non_principal_right_ideals,
    principal_right_ideal,
    right_ideal_generated,
)
from .pairs import (
    PairClassification,
    SubmodulePoints,
    classify_all_pairs,
    cyclic_submodule,
    is_admissible,
    is_free,
    is_outlier,
    is_unimodular,
    pid_decompose,
    projective_line,
    submodule_contains,
    submodule_equal,
    torsion_witness,
    unimodular_hull,
)
from .orbits import (
    OrbitTable,
    gl2_generators,
    is_invertible_mat2,
    mat2_apply,
    orbit_ideal_invariant,
    pair_orbits,
    submodule_orbits,
    verify_t3,
    verify_ternions,
)
from .catalog import (
    CATALOG,
    catalog_build,
    desk_rings,
    four_rings_report,
    named_elements_example31,
    parse_ring_spec,
)
from .verify import run_claim, run_verify

__all__ = [
    "FiniteRing", "RingSpec", "build_ring", "direct_product", "opposite_ring",
    "units", "is_left_zero_divisor", "is_right_zero_divisor",
    "check_condition_F", "is_dedekind_finite", "is_commutative", "is_local",
    "RightIdealSet", "principal_right_ideal", "right_ideal_generated",
    "all_right_ideals", "is_principal", "non_principal_right_ideals",
    "PairClassification", "SubmodulePoints", "classify_all_pairs",
    "cyclic_submodule", "is_admissible", "is_free", "is_outlier",
    "is_unimodular", "pid_decompose", "projective_line", "submodule_contains",
    "submodule_equal", "torsion_witness", "unimodular_hull",
    "OrbitTable", "gl2_generators", "is_invertible_mat2", "mat2_apply",
    "orbit_ideal_invariant", "pair_orbits", "submodule_orbits",
    "verify_t3", "verify_ternions",
    "CATALOG", "catalog_build", "desk_rings", "four_rings_report",
    "named_elements_example31", "parse_ring_spec",
    "run_claim", "run_verify",
]
