"""Parabola-cap decoupling ratio on a single cube."""

import numpy as np

from ..errors import SupportViolation
from ..fieldcore.field import SpectralField
from ..fieldcore.propagator import propagate


def parabola_caps(grid):
    """Partition of [-1,1] into ~2 sqrt(R) intervals of length ~R^(-1/2)."""
    n = int(np.ceil(2 * np.sqrt(grid.R)))
    edges = np.linspace(-1.0, 1.0, n + 1)
    return list(zip(edges[:-1], edges[1:]))


def cap_pieces(f: SpectralField, caps=None):
    """Split f over the caps; exact partition on the lattice."""
    grid = f.grid
    if grid.dim != 1:
        raise ValueError("cap decoupling is implemented for n = 1")
    if caps is None:
        caps = parabola_caps(grid)
    k = grid.freqs()
    pieces = []
    for lo, hi in caps:
        mask = (k >= lo) & (k < hi)
        if not np.any(mask & (f.coeffs != 0)):
            continue
        pieces.append(
            SpectralField(
                grid,
                np.where(mask, f.coeffs, 0.0),
                support_ball=(((lo + hi) / 2,), (hi - lo) / 2),
            )
        )
    return pieces


def _cube_time_indices(grid, t_lo, t_hi):
    t = grid.times()
    return np.flatnonzero((t > t_lo) & (t <= t_hi))


def _l6_on_window(field, grid, x_lo, x_hi, t_idx):
    """||e^{it D} field||_L6 over an x-window at the given time samples."""
    from ..fieldcore.propagator import propagate_window

    times = grid.times()[t_idx]
    x = grid.x_coords()
    xsel = (x >= x_lo) & (x < x_hi) & (np.abs(x) <= grid.R)
    vals = np.abs(propagate_window(grid, field.coeffs, x[xsel], times))
    return float((np.sum(vals**6) * grid.dx * grid.dt) ** (1 / 6))


def decoupling_ratio(f: SpectralField, cube, pieces=None, enlarge=10.0,
                     support_tol=1e-8):
    """||F||_L6(Q) / (sum_tau ||F_tau||^2_L6(10Q))^(1/2) for F = e^{itD}f.

    cube: ((x_lo,), t_lo, side) in raw coordinates.  The enlarged cube is
    clipped at the domain boundary.  Pieces default to the exact cap
    split of f; custom pieces must sum to f and respect their declared
    supports (SupportViolation otherwise).
    """
    grid = f.grid
    (x_lo,), t_lo, side = cube
    if pieces is None:
        pieces = cap_pieces(f)
    else:
        total = np.zeros_like(f.coeffs)
        for p in pieces:
            if p.support_leakage() > support_tol:
                raise SupportViolation(
                    f"piece leaks {p.support_leakage():.2e} outside its cap"
                )
            total = total + p.coeffs
        err = np.linalg.norm(total - f.coeffs) / max(np.linalg.norm(f.coeffs), 1e-300)
        if err > support_tol:
            raise SupportViolation(f"pieces sum to f only within {err:.2e}")

    t_idx_q = _cube_time_indices(grid, t_lo, t_lo + side)
    lhs = _l6_on_window(f, grid, x_lo, x_lo + side, t_idx_q)

    pad = (enlarge - 1.0) * side / 2.0
    t_idx_big = _cube_time_indices(grid, max(t_lo - pad, 0.0), min(t_lo + side + pad, grid.R))
    acc = 0.0
    for p in pieces:
        n6 = _l6_on_window(p, grid, x_lo - pad, x_lo + side + pad, t_idx_big)
        acc += n6**2
    return lhs / np.sqrt(acc)
