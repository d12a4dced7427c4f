from .cubes import CubeUnion, full_box_cubes, strip_occupancy
from .pigeonhole import PigeonholeSelection, dyadic_pigeonhole
from .decoupling import cap_pieces, decoupling_ratio, parabola_caps
from .refined import (
    bilinear_refined_ratio,
    check_essential_constancy,
    cube_l6_profile,
    enclosing_inverse_radius,
    refined_strichartz_ratio,
    refined_strichartz_ratio_2d,
    support_separation,
)
from .bilinear import (
    BilDecompositionReport,
    LocallyConstantReport,
    bil_decomposition_check,
    locally_constant_check,
)

__all__ = [
    "CubeUnion",
    "full_box_cubes",
    "strip_occupancy",
    "PigeonholeSelection",
    "dyadic_pigeonhole",
    "cap_pieces",
    "decoupling_ratio",
    "parabola_caps",
    "bilinear_refined_ratio",
    "check_essential_constancy",
    "cube_l6_profile",
    "enclosing_inverse_radius",
    "refined_strichartz_ratio",
    "refined_strichartz_ratio_2d",
    "support_separation",
    "BilDecompositionReport",
    "LocallyConstantReport",
    "bil_decomposition_check",
    "locally_constant_check",
]
