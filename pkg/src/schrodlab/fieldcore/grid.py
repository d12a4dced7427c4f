"""Discretization of the space-time box B(0,R) x [0,R].

All fields live on a periodic torus of period L >= 4R per spatial axis.
Initial data is band-limited to B(0,1), so the frequency lattice spacing
2*pi/L must resolve the unit ball: nx >= L/pi.  Time is sampled at the
right endpoints of nt equal subintervals of (0, R], which realises the
paper-side constraint "0 < t <= R" exactly and makes sup-in-t a maximum
over the sample set.
"""

from dataclasses import dataclass
from math import ceil, log2, pi

import numpy as np

from ..errors import GridTooCoarse


@dataclass(frozen=True)
class GridSpec:
    """Sampling layout for one scale R.

    dim : spatial dimension n (1 or 2)
    R   : physical/temporal scale of the box B(0,R) x [0,R]
    L   : spatial period of the torus, L >= 4R
    nx  : samples per spatial axis
    nt  : time samples on (0, R]
    """

    dim: int
    R: float
    L: float
    nx: int
    nt: int

    def __post_init__(self):
        if self.dim not in (1, 2):
            raise ValueError(f"dim must be 1 or 2, got {self.dim}")
        if self.R <= 0 or self.L < 4 * self.R:
            raise ValueError("need R > 0 and L >= 4R")
        if self.nx < self.L / pi:
            raise GridTooCoarse(
                f"nx={self.nx} cannot resolve B(0,1): need nx >= L/pi = {self.L / pi:.1f}"
            )
        if self.nt < self.nx:
            raise ValueError(f"nt={self.nt} must be >= nx={self.nx}")

    @property
    def dx(self):
        return self.L / self.nx

    @property
    def dt(self):
        return self.R / self.nt

    @property
    def nyquist(self):
        """Largest resolvable |frequency| per axis."""
        return pi * self.nx / self.L

    @property
    def space_shape(self):
        return (self.nx,) * self.dim

    def x_coords(self):
        """1D coordinate array, torus centered at 0: [-L/2, L/2)."""
        return (np.arange(self.nx) - self.nx // 2) * self.dx

    def times(self):
        """Right-endpoint time samples (0, R], including R."""
        return (np.arange(self.nt) + 1) * self.dt

    def freqs(self):
        """Frequency lattice per axis, FFT ordering."""
        return 2 * pi * np.fft.fftfreq(self.nx, d=self.dx)

    def freq_sq_grid(self):
        """|xi|^2 on the full frequency lattice (FFT ordering)."""
        k = self.freqs()
        if self.dim == 1:
            return k**2
        return k[:, None] ** 2 + k[None, :] ** 2

    def ball_mask(self, radius=None):
        """Spatial mask of the ball B(0, radius); defaults to B(0,R)."""
        r = self.R if radius is None else radius
        x = self.x_coords()
        if self.dim == 1:
            return np.abs(x) <= r
        return x[:, None] ** 2 + x[None, :] ** 2 <= r**2

    def cell_volume(self):
        return self.dx**self.dim


def make_grid(dim, R, oversample=1.0, nt=None):
    """Standard grid for scale R: L = 4R, nx the next power of two
    resolving B(0,1) (times `oversample`), nt defaulting to nx."""
    L = 4.0 * R
    n_min = oversample * L / pi
    nx = 1 << int(ceil(log2(n_min)))
    if nt is None:
        nt = nx
    return GridSpec(dim=dim, R=float(R), L=L, nx=nx, nt=int(nt))
