"""Refined Strichartz ratios over cube unions."""

import numpy as np

from ..errors import NonUniformCubes, SeparationViolated
from ..fieldcore.propagator import propagate
from .cubes import CubeUnion, strip_occupancy


def cube_l6_profile(values, grid, Y: CubeUnion, power=6.0):
    """Per-cube L^power masses of |values| accumulated by lattice binning.

    Returns dict cube index -> ||u||^power over the cube (quadrature sums).
    Samples outside B(0,R) are ignored.
    """
    if grid.dim != Y.dim:
        raise ValueError("dimension mismatch")
    x = grid.x_coords()
    t = grid.times()
    side = Y.side
    ix = np.floor((x + Y.R) / side).astype(int)
    it = np.ceil(t / side).astype(int) - 1
    ok_x = (np.abs(x) <= Y.R) & (ix >= 0) & (ix < Y.n_cols)
    ok_t = (it >= 0) & (it < Y.n_strips)

    w = np.abs(values) ** power * (grid.cell_volume() * grid.dt)
    if grid.dim == 1:
        w = w[ok_x][:, ok_t]
        flat_idx = (
            ix[ok_x][:, None] * Y.n_strips + it[ok_t][None, :]
        ).reshape(-1)
        sums = np.bincount(flat_idx, weights=w.reshape(-1),
                           minlength=Y.n_cols * Y.n_strips)
        out = {}
        for idx in Y.cubes:
            out[idx] = float(sums[idx[0] * Y.n_strips + idx[1]])
        return out
    w = w[ok_x][:, ok_x][:, :, ok_t]
    fx = ix[ok_x]
    ft = it[ok_t]
    flat_idx = (
        (fx[:, None, None] * Y.n_cols + fx[None, :, None]) * Y.n_strips
        + ft[None, None, :]
    ).reshape(-1)
    sums = np.bincount(
        flat_idx, weights=w.reshape(-1), minlength=Y.n_cols**2 * Y.n_strips
    )
    return {
        idx: float(sums[(idx[0] * Y.n_cols + idx[1]) * Y.n_strips + idx[2]])
        for idx in Y.cubes
    }


def check_essential_constancy(cube_masses, factor=4.0**6):
    """Per-cube masses (sixth powers) must sit within one dyadic step in
    norm, i.e. a factor 4^6 in mass."""
    vals = np.array([v for v in cube_masses.values() if v > 0])
    if len(vals) == 0:
        raise NonUniformCubes("no mass on the cube union")
    if vals.max() / vals.min() > factor:
        raise NonUniformCubes(
            f"per-cube norms spread by {(vals.max() / vals.min()) ** (1 / 6.0):.2f}"
            " (max/min > 4); pigeonhole first"
        )


def refined_strichartz_ratio(g, Y: CubeUnion, u=None, require_uniform=True,
                             check_constancy=True):
    """||e^{itD}g||_L6(Y) / (sigma^(-1/3) ||g||_2) for 1D data g."""
    grid = g.grid
    if grid.dim != 1:
        raise ValueError("refined Strichartz ratio is the n=1 operation")
    sigma, counts, uniform = strip_occupancy(Y)
    if require_uniform and not uniform:
        raise NonUniformCubes("strips are not uniformly occupied (min < sigma/2)")
    if u is None:
        u = propagate(g)
    masses = cube_l6_profile(u.values, grid, Y)
    if check_constancy:
        check_essential_constancy(masses)
    norm6 = sum(masses.values()) ** (1 / 6.0)
    return norm6 / (sigma ** (-1 / 3.0) * g.norm_l2())


def refined_strichartz_ratio_2d(f, Y: CubeUnion, u=None):
    """2D variant: ||e^{itD}f||_L6(Y) / (R^(-1/6) sigma^(-1/3) ||f||_2);
    the tangency constant E^{O(1)} is reported by the caller separately."""
    grid = f.grid
    if grid.dim != 2:
        raise ValueError("use refined_strichartz_ratio for n=1")
    sigma, _, _ = strip_occupancy(Y)
    if u is None:
        u = propagate(f)
    masses = cube_l6_profile(u.values, grid, Y)
    norm6 = sum(masses.values()) ** (1 / 6.0)
    return norm6 / (grid.R ** (-1 / 6.0) * sigma ** (-1 / 3.0) * f.norm_l2())


def support_separation(f1, f2):
    c1, r1 = f1.support_ball
    c2, r2 = f2.support_ball
    return float(np.linalg.norm(np.array(c1) - np.array(c2)) - r1 - r2)


def enclosing_inverse_radius(f1, f2):
    """M with both supports inside B(center, 1/M), clamped to M >= 1."""
    c1, r1 = np.array(f1.support_ball[0]), f1.support_ball[1]
    c2, r2 = np.array(f2.support_ball[0]), f2.support_ball[1]
    mid = (c1 + c2) / 2
    rho = max(np.linalg.norm(c1 - mid) + r1, np.linalg.norm(c2 - mid) + r2)
    return max(1.0, 1.0 / rho)


def bilinear_refined_ratio(f1, f2, Y: CubeUnion, separation, u1=None, u2=None,
                           check_constancy=True):
    """|| |u1 u2|^(1/2) ||_L6(Y) / (M^(1/6) N^(-1/6) R^(-1/6) prod ||f_i||^(1/2))."""
    if support_separation(f1, f2) < separation:
        raise SeparationViolated(
            f"supports separated by {support_separation(f1, f2):.4f} < {separation}"
        )
    grid = f1.grid
    if u1 is None:
        u1 = propagate(f1)
    if u2 is None:
        u2 = propagate(f2)
    prod = np.sqrt(np.abs(u1.values) * np.abs(u2.values))
    masses = cube_l6_profile(prod, grid, Y)
    if check_constancy:
        check_essential_constancy(masses)
    N = len(Y)
    M = enclosing_inverse_radius(f1, f2)
    norm6 = sum(masses.values()) ** (1 / 6.0)
    denom = (
        M ** (1 / 6.0)
        * N ** (-1 / 6.0)
        * grid.R ** (-1 / 6.0)
        * np.sqrt(f1.norm_l2() * f2.norm_l2())
    )
    return norm6 / denom
