from .grid import GridSpec, make_grid
from .field import SpectralField, SpaceTimeField, random_bandlimited
from .propagator import propagate, propagate_slice, maximal_function, unitarity_defect
from .norms import MixedNormParams, mixed_norm, lp_norm, full_box_mask, region_measure
from .littlewood import littlewood_paley, shell_multipliers, hs_norm
from .rescale import (
    RescaleMap,
    parabolic_rescale,
    expected_norm_ratio,
    image_box_mask,
    norm_transport_check,
)
from .fitting import ExponentFit, fit_exponent

__all__ = [
    "GridSpec",
    "make_grid",
    "SpectralField",
    "SpaceTimeField",
    "random_bandlimited",
    "propagate",
    "propagate_slice",
    "maximal_function",
    "unitarity_defect",
    "MixedNormParams",
    "mixed_norm",
    "lp_norm",
    "full_box_mask",
    "region_measure",
    "littlewood_paley",
    "shell_multipliers",
    "hs_norm",
    "RescaleMap",
    "parabolic_rescale",
    "expected_norm_ratio",
    "image_box_mask",
    "norm_transport_check",
    "ExponentFit",
    "fit_exponent",
]
