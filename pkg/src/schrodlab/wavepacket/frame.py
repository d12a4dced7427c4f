"""Tile frame: dual (theta, nu) rectangles and the packet profile.

The 1D profile is phihat0 = sqrt(plateau): supported in [-kappa, kappa],
identically 1 on [-kappa/2, kappa/2], and its squared translates at
spacing 3*kappa/2 sum to one exactly (matched smooth ramps).  Tiling the
frequency axis at that spacing and the physical torus with the full
nu-lattice gives a frame that is exactly tight on band-limited data, so
the reconstruction constant c_kappa is a single number per configuration.

Tile sides keep the exact duality theta_side * nu_side = 1, with nu_side
the closest divisor of the torus period to sqrt(R).
"""

from dataclasses import dataclass
from math import pi

import numpy as np

from ..errors import ScaleMismatch
from ..fieldcore.bumps import plateau
from ..fieldcore.grid import GridSpec


def profile_hat(s, kappa):
    """Unnormalized frequency profile: sqrt of the matched plateau."""
    return np.sqrt(plateau(s, kappa / 2.0, kappa))


@dataclass(frozen=True)
class Tile:
    """Dual pair of a frequency cube theta and a physical cube nu."""

    theta_center: tuple
    nu_center: tuple
    theta_side: float
    nu_side: float
    R: float

    def __post_init__(self):
        if abs(self.theta_side * self.nu_side - 1.0) > 1e-9:
            raise ValueError("tile rectangles are not dual: |theta||nu| != 1")

    @property
    def dim(self):
        return len(self.theta_center)

    def direction(self):
        """Space-time tube direction G0(theta) = (-2 c(theta), 1)."""
        return np.array([-2.0 * c for c in self.theta_center] + [1.0])


@dataclass(frozen=True)
class Tube:
    """Slanted space-time tube attached to a tile.

    Membership is exactly {0 <= t <= R, |x - c(nu) + 2 t c(theta)| <= radius}
    with radius R^(1/2 + delta).
    """

    tile: Tile
    delta: float

    @property
    def radius(self):
        return self.tile.R ** (0.5 + self.delta)

    @property
    def length(self):
        return self.tile.R

    def axis_point(self, t):
        """Central-line position at time t: c(nu) - 2 t c(theta)."""
        cnu = np.array(self.tile.nu_center)
        cth = np.array(self.tile.theta_center)
        return cnu - 2.0 * np.multiply.outer(np.asarray(t, dtype=float), cth)

    def contains(self, x, t, dilate=1.0):
        """Vectorized membership; x has trailing axis dim for n = 2."""
        x = np.asarray(x, dtype=float)
        t = np.asarray(t, dtype=float)
        offset = x - self.axis_point(t)
        if self.tile.dim == 1:
            dist = np.abs(offset[..., 0] if offset.ndim > t.ndim else offset)
        else:
            dist = np.linalg.norm(offset, axis=-1)
        return (t >= 0) & (t <= self.length) & (dist <= dilate * self.radius)

    def angle_to_time_axis(self):
        g = self.tile.direction()
        return float(np.arccos(g[-1] / np.linalg.norm(g)))


def tube_of(tile: Tile, delta: float) -> Tube:
    if not 0 < delta < 0.25:
        raise ValueError("delta must lie in (0, 1/4)")
    return Tube(tile=tile, delta=delta)


class WavePacketFrame:
    """Frame of wave packets phi_(theta,nu) at a single scale R on a grid."""

    def __init__(self, grid: GridSpec, kappa=0.125):
        if not 0 < kappa <= 1.0:
            raise ValueError("kappa must be in (0, 1]")
        self.grid = grid
        self.kappa = float(kappa)
        self.R = grid.R
        n_nu = int(round(grid.L / np.sqrt(grid.R)))
        self.nu_side = grid.L / n_nu
        self.n_nu = n_nu
        self.theta_side = 1.0 / self.nu_side
        self.theta_spacing = 1.5 * self.kappa * self.theta_side
        # per-axis amplitude making ||phi_theta||_2 = 1 exactly:
        # integral of profile^2 over one spacing period is 3*kappa/2
        self.amplitude = np.sqrt(2 * pi / (self.theta_side * 1.5 * self.kappa))
        self._c_kappa = None

    # -- lattices ---------------------------------------------------------

    def nu_centers_axis(self):
        return -self.grid.L / 2.0 + self.nu_side * np.arange(self.n_nu)

    def theta_keys_covering(self, center, radius):
        """Per-axis integer key ranges for theta centers whose profile
        touches [center - radius, center + radius]."""
        reach = radius + self.kappa * self.theta_side
        lo = int(np.floor((center - reach) / self.theta_spacing))
        hi = int(np.ceil((center + reach) / self.theta_spacing))
        return np.arange(lo, hi + 1)

    def theta_center_of(self, key):
        return self.theta_spacing * np.asarray(key, dtype=float)

    def tile(self, theta_key, nu_key) -> Tile:
        th = tuple(self.theta_spacing * k for k in theta_key)
        nus = self.nu_centers_axis()
        nu = tuple(nus[j] for j in nu_key)
        return Tile(
            theta_center=th,
            nu_center=nu,
            theta_side=self.theta_side,
            nu_side=self.nu_side,
            R=self.R,
        )

    # -- profile on the lattice -------------------------------------------

    def axis_window(self, kshift, center):
        """Indices of the (shifted, monotone) lattice under one 1D profile."""
        reach = self.kappa * self.theta_side
        lo = np.searchsorted(kshift, center - reach, side="left")
        hi = np.searchsorted(kshift, center + reach, side="right")
        return lo, hi

    def axis_profile(self, k, center):
        return self.amplitude * profile_hat((k - center) / self.theta_side, self.kappa)

    def require_grid(self, field):
        if field.grid != self.grid:
            raise ScaleMismatch("field grid does not match the frame's grid")

    # -- reconstruction constant ------------------------------------------

    @property
    def c_kappa(self):
        """Calibrated once per configuration; see calibrate_c_kappa."""
        if self._c_kappa is None:
            self._c_kappa = calibrate_c_kappa(self)
        return self._c_kappa

    def c_kappa_closed_form(self):
        """Tightness of the construction gives c_kappa = (3 kappa / 4 pi)^n."""
        return (3.0 * self.kappa / (4.0 * pi)) ** self.grid.dim


def calibrate_c_kappa(frame: WavePacketFrame):
    """Least-squares fit of reconstruct(decompose(f)) to f on a reference
    Gaussian, i.e. c = <f, Sf> / ||Sf||^2 with S the uncalibrated frame map."""
    from ..fieldcore.field import SpectralField
    from .transform import decompose, reconstruct

    grid = frame.grid
    k = grid.freqs()
    if grid.dim == 1:
        d2 = k**2
    else:
        d2 = k[:, None] ** 2 + k[None, :] ** 2
    coeffs = np.exp(-d2 / 0.3**2) * (d2 <= 0.81)
    ref = SpectralField(grid, coeffs, support_ball=((0.0,) * grid.dim, 0.9))
    cs = decompose(ref, frame)
    sf = reconstruct(cs, c_kappa=1.0)
    num = np.real(np.vdot(sf.coeffs, ref.coeffs))
    den = np.real(np.vdot(sf.coeffs, sf.coeffs))
    return float(num / den)
