from .frame import Tile, Tube, WavePacketFrame, profile_hat, tube_of
from .transform import (
    CoefficientSet,
    coefficients_from_jsonl,
    decompose,
    measure_frame_bounds,
    packet_field,
    reconstruct,
)
from .localization import (
    TubeLocalizationReport,
    coverage_budget,
    frequency_cap_check,
    tube_mass_fraction,
)

__all__ = [
    "Tile",
    "Tube",
    "WavePacketFrame",
    "profile_hat",
    "tube_of",
    "CoefficientSet",
    "coefficients_from_jsonl",
    "decompose",
    "measure_frame_bounds",
    "packet_field",
    "reconstruct",
    "TubeLocalizationReport",
    "coverage_budget",
    "frequency_cap_check",
    "tube_mass_fraction",
]
