"""Parabolic rescaling of data supported in a small frequency ball.

For supp(fhat) in B(xi0, 1/M) the change of variables

    y = x/M + 2 t xi0 / M,    r = t / M^2

turns e^{it Delta} f into e^{ir Delta} g for a unit-band-limited g with
||g||_2 = ||f||_2; on the lattice the transport is exact once xi0 is
snapped to a frequency lattice point.  The L^p norm over B(0,R) x [0,R]
picks up the factor M^{(n+2)/p - n/2} (= M^{4/p - 1} when n = 2) against
the norm over the image box of dimensions ~ (R/M)^n x (R/M^2).
"""

from dataclasses import dataclass
from math import pi

import numpy as np

from ..errors import BadSupport
from .field import SpectralField
from .grid import GridSpec
from .norms import MixedNormParams, mixed_norm
from .propagator import propagate


@dataclass(frozen=True)
class RescaleMap:
    """Affine map (x,t) -> (y,r) attached to a parabolic rescaling."""

    M: float
    xi0: tuple
    R: float

    def forward(self, x, t):
        x = np.asarray(x, dtype=float)
        xi0 = np.array(self.xi0)
        y = x / self.M + 2.0 * np.multiply.outer(np.asarray(t, dtype=float), xi0) / self.M
        return y, np.asarray(t, dtype=float) / self.M**2

    def map_tube_center(self, c_theta):
        """Frequency center of a tube's tile after rescaling: M*(c - xi0)."""
        return self.M * (np.asarray(c_theta, dtype=float) - np.array(self.xi0))

    @property
    def image_space_radius(self):
        return self.R / self.M

    @property
    def image_time(self):
        return self.R / self.M**2


def snap_to_lattice(grid: GridSpec, xi):
    """Nearest frequency lattice point, returned with its integer index."""
    step = 2 * pi / grid.L
    m = np.round(np.atleast_1d(np.asarray(xi, dtype=float)) / step).astype(int)
    return tuple(step * m), m


def parabolic_rescale(f: SpectralField, xi0, M, tol=1e-8):
    """Rescale f (supp fhat in B(xi0,1/M)) to unit-band-limited g.

    Returns (g, RescaleMap).  Raises BadSupport if fhat leaks outside
    B(xi0, 1/M) by more than tol in relative L2 mass.
    """
    grid = f.grid
    M = float(M)
    if M < 1:
        raise ValueError("M must be >= 1")
    xi0_s, m0 = snap_to_lattice(grid, xi0)

    probe = SpectralField(grid, f.coeffs, support_ball=(xi0_s, 1.0 / M))
    leak = probe.support_leakage()
    if leak > tol:
        raise BadSupport(f"mass {leak:.2e} outside B(xi0, 1/M)")

    new_grid = GridSpec(
        dim=grid.dim,
        R=grid.R / M**2,
        L=grid.L / M,
        nx=grid.nx,
        nt=grid.nt,
    )
    g_coeffs = f.coeffs
    for ax, shift in enumerate(m0):
        g_coeffs = np.roll(g_coeffs, -int(shift), axis=ax)
    g_coeffs = g_coeffs * M ** (-grid.dim / 2.0)
    g = SpectralField(new_grid, g_coeffs, support_ball=((0.0,) * grid.dim, 1.0))
    return g, RescaleMap(M=M, xi0=xi0_s, R=grid.R)


def expected_norm_ratio(M, p, dim):
    """Predicted ||.||_Lp(box) / ||.||_Lp(image box) = M^((n+2)/p - n/2)."""
    return M ** ((dim + 2.0) / p - dim / 2.0)


def image_box_mask(g: SpectralField, rmap: RescaleMap):
    """Mask over g's grid of the image of B(0,R) x [0,R] under the map."""
    grid = g.grid
    x = grid.x_coords()
    times = grid.times()
    xi0 = np.array(rmap.xi0)
    Lp = grid.L
    mask = np.zeros(grid.space_shape + (grid.nt,), dtype=bool)
    rad = rmap.image_space_radius
    for i, r in enumerate(times):
        c = 2.0 * rmap.M * r * xi0
        if grid.dim == 1:
            d = np.remainder(x - c[0] + Lp / 2, Lp) - Lp / 2
            mask[:, i] = np.abs(d) <= rad
        else:
            d0 = np.remainder(x - c[0] + Lp / 2, Lp) - Lp / 2
            d1 = np.remainder(x - c[1] + Lp / 2, Lp) - Lp / 2
            mask[:, :, i] = d0[:, None] ** 2 + d1[None, :] ** 2 <= rad**2
    return mask


def norm_transport_check(f: SpectralField, xi0, M, p):
    """Evaluate both sides of the rescaling identity by independent quadrature.

    Returns dict with lhs, rhs, measured ratio, and the predicted ratio.
    """
    g, rmap = parabolic_rescale(f, xi0, M)
    u = propagate(f)
    lhs = mixed_norm(u, MixedNormParams(p=p, q=p))
    v = propagate(g)
    mask = image_box_mask(g, rmap)
    rhs = mixed_norm(v, MixedNormParams(p=p, q=p, region=mask))
    return {
        "lhs": lhs,
        "rhs": rhs,
        "ratio": lhs / rhs,
        "expected": expected_norm_ratio(M, p, f.grid.dim),
    }
