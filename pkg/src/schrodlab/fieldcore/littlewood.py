"""Littlewood-Paley slicing into dyadic frequency shells.

The radial multipliers are square roots of a telescoping smooth partition,
so sum_k psi_k(xi)^2 = 1 exactly on the lattice and Plancherel gives
sum_k ||f_k||_2^2 = ||f||_2^2 with no partition constant.

Shell labeling: piece 0 is supported in B(0,1); piece k >= 1 is supported
in the open annulus A(2^k) = {2^(k-2) < |xi| < 2^k}, with the smooth
transition of S_k living on [2^(k-1), 2^k].
"""

import numpy as np

from .bumps import smooth_step
from .field import SpectralField


def _radial_abs(grid):
    k = grid.freqs()
    if grid.dim == 1:
        return np.abs(k)
    return np.sqrt(k[:, None] ** 2 + k[None, :] ** 2)


def shell_multipliers(grid, kmax):
    """List of psi_k masks on the lattice, k = 0..kmax, sum of squares = 1
    for |xi| < 2^(kmax-1); above that the top shell absorbs the rest."""
    r = _radial_abs(grid)
    with np.errstate(divide="ignore"):
        s = np.where(r > 0, np.log2(np.maximum(r, 1e-300)), -np.inf)
    # S_k rises from 0 to 1 as log2|xi| goes k-1 -> k
    steps = [smooth_step(s - (k - 1)) for k in range(kmax + 1)]
    masks = [np.sqrt(np.clip(1.0 - steps[0], 0.0, 1.0))]
    for k in range(1, kmax):
        masks.append(np.sqrt(np.clip(steps[k - 1] - steps[k], 0.0, 1.0)))
    masks.append(np.sqrt(np.clip(steps[kmax - 1], 0.0, 1.0)))
    return masks


def littlewood_paley(f: SpectralField, kmax=None):
    """Split f into pieces f_k; fhat_0 on B(0,1), fhat_k on A(2^k)."""
    grid = f.grid
    if kmax is None:
        _, radius = f.support_ball
        kmax = max(1, int(np.ceil(np.log2(max(radius, 2.0)))) + 1)
    masks = shell_multipliers(grid, kmax)
    pieces = []
    for k, m in enumerate(masks):
        radius = 1.0 if k == 0 else 2.0**k
        pieces.append(
            SpectralField(
                grid,
                f.coeffs * m,
                support_ball=((0.0,) * grid.dim, radius),
            )
        )
    return pieces


def hs_norm(f: SpectralField, s: float) -> float:
    """Sobolev H^s norm via the lattice weights (1+|xi|^2)^(s/2)."""
    r = _radial_abs(f.grid)
    w = (1.0 + r**2) ** s
    n = f.grid.dim
    return float(np.sqrt(np.sum(w * np.abs(f.coeffs) ** 2) / f.grid.L**n))
