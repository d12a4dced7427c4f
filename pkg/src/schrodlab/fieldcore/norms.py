"""Mixed L^p_x L^q_t norms over regions of the space-time box.

Quadrature is the rectangle rule on the uniform grid: cell weight dx^n in
space and dt in time, boundary cells counted with full weight.  q = inf
takes a per-x maximum over the time samples inside the region.
"""

import math
from dataclasses import dataclass

import numpy as np

from ..errors import EmptyRegion
from .field import SpaceTimeField


@dataclass
class MixedNormParams:
    """Exponents and region for an L^p_x L^q_t norm.

    region: boolean mask over the (x..., t) sample lattice, or None for the
    full box B(0,R) x [0,R].  Use math.inf for sup norms.
    """

    p: float
    q: float
    region: np.ndarray = None

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError("exponents must be >= 1")


def full_box_mask(grid, ntimes=None):
    """Mask of B(0,R) x [0,R]: spatial ball restriction at every sample time."""
    nt = grid.nt if ntimes is None else ntimes
    ball = grid.ball_mask()
    return np.broadcast_to(ball[..., None], ball.shape + (nt,))


def mixed_norm(u: SpaceTimeField, params: MixedNormParams) -> float:
    grid = u.grid
    mask = params.region
    if mask is None:
        mask = full_box_mask(grid, ntimes=len(u.times))
    mask = np.broadcast_to(mask, u.values.shape)
    if not mask.any():
        raise EmptyRegion("region contains no grid points")

    absu = np.where(mask, np.abs(u.values), 0.0)
    p, q = params.p, params.q

    if math.isinf(q):
        inner = np.max(absu, axis=-1)
    else:
        inner = (np.sum(absu**q, axis=-1) * grid.dt) ** (1.0 / q)

    if math.isinf(p):
        return float(np.max(inner))
    return float((np.sum(inner**p) * grid.cell_volume()) ** (1.0 / p))


def lp_norm(u: SpaceTimeField, p: float, region=None) -> float:
    """Plain space-time L^p over a region (p = q case of the mixed norm)."""
    return mixed_norm(u, MixedNormParams(p=p, q=p, region=region))


def region_measure(grid, mask) -> float:
    """Quadrature measure of a space-time mask."""
    return float(mask.sum() * grid.cell_volume() * grid.dt)
