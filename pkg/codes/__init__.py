"""Linear codes over GF(p) and the constructions from plateaued functions."""

from .linear_code import (
    LinearCode,
    WeightDistribution,
    enumerate_weights,
    gram_rank,
    is_self_orthogonal,
    is_lcd,
    is_self_dual,
)
from .macwilliams import macwilliams, krawtchouk_column, pless_a3_dual
from .bounds import (
    SpherePacking,
    DivisibilityVerdict,
    Extendability,
    sphere_packing_classify,
    sphere_volume,
    divisibility_selforth,
    extendability,
)
from .construct import (
    ConstructionBundle,
    CODE_KINDS,
    build,
    build_cbar,
    build_cf,
    build_cstar,
    build_extended,
    construct_bundle,
    g1_matrix,
)
from .self_dual import SelfDualResult, extend_to_self_dual, self_dual_condition

__all__ = [
    "LinearCode",
    "WeightDistribution",
    "enumerate_weights",
    "gram_rank",
    "is_self_orthogonal",
    "is_lcd",
    "is_self_dual",
    "macwilliams",
    "krawtchouk_column",
    "pless_a3_dual",
    "SpherePacking",
    "DivisibilityVerdict",
    "Extendability",
    "sphere_packing_classify",
    "sphere_volume",
    "divisibility_selforth",
    "extendability",
    "ConstructionBundle",
    "CODE_KINDS",
    "build",
    "build_cbar",
    "build_cf",
    "build_cstar",
    "build_extended",
    "construct_bundle",
    "g1_matrix",
    "SelfDualResult",
    "extend_to_self_dual",
    "self_dual_condition",
]
