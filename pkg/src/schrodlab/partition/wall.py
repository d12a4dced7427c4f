"""The wall: a neighborhood of the partition variety on the grid."""

from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .hamsandwich import TIE_TOL
from .poly import grid_points


@dataclass
class Wall:
    polynomial: object
    width: float
    mask: np.ndarray           # (space..., time) bool
    cloud: np.ndarray          # sampled zero-set points, raw coords
    resolution: float          # sampling resolution of the zero cloud


def zero_point_cloud(P, grid, resolution=None, bounds=None):
    """Zero-set samples of every factor by sign-change marching.

    Crossing locations are linearly interpolated along each axis of a
    marching lattice of the requested resolution (default: the grid's own
    spacing, refined if the wall width demands it).
    """
    if bounds is None:
        half = grid.L / 2
        lo = np.array([-half] * grid.dim + [0.0])
        hi = np.array([half] * grid.dim + [grid.R])
    else:
        lo, hi = (np.asarray(b, dtype=float) for b in bounds)
    if resolution is None:
        resolution = max(grid.dx, grid.dt)
    axes = [
        np.arange(lo[a], hi[a] + resolution / 2, resolution)
        for a in range(grid.dim + 1)
    ]
    mesh = np.meshgrid(*axes, indexing="ij")
    pts = np.stack(mesh, axis=-1)
    clouds = []
    for factor in P.factors:
        vals = factor(pts / P.scale)
        vmax = np.max(np.abs(vals))
        if vmax == 0:
            continue
        # lattice points where the factor vanishes exactly (up to fp) would
        # be invisible to sign-change marching; collect them directly
        exact = np.abs(vals) <= 1e-12 * vmax
        if exact.any():
            clouds.append(pts[exact])
        for ax in range(pts.ndim - 1):
            a = [slice(None)] * (pts.ndim - 1)
            b = [slice(None)] * (pts.ndim - 1)
            a[ax] = slice(None, -1)
            b[ax] = slice(1, None)
            va, vb = vals[tuple(a)], vals[tuple(b)]
            cross = np.sign(va) * np.sign(vb) < 0
            if not cross.any():
                continue
            frac = va[cross] / (va[cross] - vb[cross])
            pa = pts[tuple(a) + (slice(None),)][cross]
            pb = pts[tuple(b) + (slice(None),)][cross]
            clouds.append(pa + frac[:, None] * (pb - pa))
    if clouds:
        return np.concatenate(clouds, axis=0)
    return np.empty((0, grid.dim + 1))


def wall_region(P, grid, delta) -> Wall:
    """Grid mask of points within R^(1/2+delta) of the sampled zero set."""
    width = grid.R ** (0.5 + delta)
    target = width / 8.0
    resolution = min(max(grid.dx, grid.dt), target)
    cloud = zero_point_cloud(P, grid, resolution=resolution)

    pts = grid_points(grid)
    flat = pts.reshape(-1, grid.dim + 1)
    if len(cloud) == 0:
        mask = np.zeros(len(flat), dtype=bool)
    else:
        tree = cKDTree(cloud)
        dist, _ = tree.query(flat, k=1)
        mask = dist <= width
    # points where some factor is numerically zero belong to the wall too
    signs = P.sign_vectors(flat, tie_tol=TIE_TOL)
    mask |= np.any(signs == 0, axis=0)
    shape = grid.space_shape + (grid.nt,)
    return Wall(
        polynomial=P,
        width=width,
        mask=mask.reshape(shape),
        cloud=cloud,
        resolution=resolution,
    )
