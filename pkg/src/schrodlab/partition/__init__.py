from .poly import (
    PartitionPolynomial,
    Poly,
    graded_monomials,
    grid_points,
    partition_polynomial_from_json,
    poly_space_dim,
)
from .hamsandwich import ham_sandwich_bisect, mixed_mass, build_layout
from .cells import Cell, balance_report, degree_schedule, polynomial_partition
from .lines import LineCellCount, cells_entered_by_line
from .wall import Wall, wall_region, zero_point_cloud
from .tangency import TangencyLabel, classify_tangency, is_E_tangent
from .incidence import (
    IncidenceReport,
    orthogonality_budget,
    tube_cell_incidence,
    tube_cells,
)

__all__ = [
    "PartitionPolynomial",
    "Poly",
    "graded_monomials",
    "grid_points",
    "partition_polynomial_from_json",
    "poly_space_dim",
    "ham_sandwich_bisect",
    "mixed_mass",
    "build_layout",
    "Cell",
    "balance_report",
    "degree_schedule",
    "polynomial_partition",
    "LineCellCount",
    "cells_entered_by_line",
    "Wall",
    "wall_region",
    "zero_point_cloud",
    "TangencyLabel",
    "classify_tangency",
    "is_E_tangent",
    "IncidenceReport",
    "orthogonality_budget",
    "tube_cell_incidence",
    "tube_cells",
]
