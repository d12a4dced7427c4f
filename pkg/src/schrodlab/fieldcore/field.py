"""Spectral initial data and sampled space-time solutions."""

from dataclasses import dataclass, field

import numpy as np

from ..errors import BadSupport
from .grid import GridSpec


@dataclass
class SpectralField:
    """Initial data f given by Fourier coefficients on the grid's lattice.

    coeffs is indexed in FFT ordering, one axis per spatial dimension.
    support_ball = (center, radius) declares supp(fhat); radius is 1/M in
    the band-limited setting but may exceed 1 for Littlewood-Paley staging.
    """

    grid: GridSpec
    coeffs: np.ndarray
    support_ball: tuple = ((0.0,), 1.0)

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs, dtype=np.complex128)
        if self.coeffs.shape != self.grid.space_shape:
            raise ValueError(
                f"coeffs shape {self.coeffs.shape} != grid {self.grid.space_shape}"
            )
        center, radius = self.support_ball
        center = tuple(float(c) for c in np.atleast_1d(center))
        if len(center) != self.grid.dim:
            raise ValueError("support ball center has wrong dimension")
        self.support_ball = (center, float(radius))

    @property
    def xi0(self):
        return np.array(self.support_ball[0])

    @property
    def radius(self):
        return self.support_ball[1]

    def support_mask(self, enlarge=1.0):
        """Lattice mask of B(center, enlarge*radius)."""
        k = self.grid.freqs()
        center, radius = self.support_ball
        if self.grid.dim == 1:
            d2 = (k - center[0]) ** 2
        else:
            d2 = (k[:, None] - center[0]) ** 2 + (k[None, :] - center[1]) ** 2
        return d2 <= (enlarge * radius) ** 2

    def norm_l2(self):
        """L2 norm on the torus via Plancherel: ||f||_2^2 = L^-n sum |fhat|^2."""
        n = self.grid.dim
        return float(np.sqrt(np.sum(np.abs(self.coeffs) ** 2) / self.grid.L**n))

    def support_leakage(self):
        """Relative L2 mass of coeffs outside the declared support ball."""
        total = np.sum(np.abs(self.coeffs) ** 2)
        if total == 0:
            return 0.0
        outside = np.sum(np.abs(self.coeffs[~self.support_mask()]) ** 2)
        return float(np.sqrt(outside / total))

    def validate_support(self, tol=1e-10):
        leak = self.support_leakage()
        if leak > tol:
            raise BadSupport(f"relative mass {leak:.3e} outside declared ball")

    def values(self):
        """Physical samples of f on the centered x-grid."""
        import scipy.fft as sfft

        n = self.grid.dim
        u = sfft.ifftn(self.coeffs, workers=-1) * (self.grid.nx / self.grid.L) ** n
        return _center(u, self.grid)


def _center(u, grid):
    """Roll FFT-ordered spatial axes so index 0 is x = -L/2."""
    shift = grid.nx // 2
    for ax in range(grid.dim):
        u = np.roll(u, shift, axis=ax)
    return u


def _uncenter(u, grid):
    shift = grid.nx // 2
    for ax in range(grid.dim):
        u = np.roll(u, -shift, axis=ax)
    return u


@dataclass
class SpaceTimeField:
    """Samples of u(x,t) on the centered x-grid times a time list.

    values has shape (nx,)*dim + (len(times),): x-major, then t.
    """

    grid: GridSpec
    values: np.ndarray
    times: np.ndarray = field(default=None)

    def __post_init__(self):
        self.values = np.asarray(self.values)
        if self.times is None:
            self.times = self.grid.times()
        self.times = np.asarray(self.times, dtype=float)
        expect = self.grid.space_shape + (len(self.times),)
        if self.values.shape != expect:
            raise ValueError(f"values shape {self.values.shape} != {expect}")
        if not np.all(np.isfinite(self.values.view(float))):
            raise ValueError("non-finite values in space-time field")

    def time_slice_norms(self):
        """L2(torus) norm of u(.,t) for each sampled t."""
        n = self.grid.dim
        axes = tuple(range(n))
        return np.sqrt(
            np.sum(np.abs(self.values) ** 2, axis=axes) * self.grid.cell_volume()
        )


def random_bandlimited(grid, rng, center=None, radius=1.0, norm=1.0):
    """Random field with flat complex-Gaussian spectrum on B(center, radius)."""
    if center is None:
        center = (0.0,) * grid.dim
    shape = grid.space_shape
    coeffs = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
    f = SpectralField(grid, coeffs, support_ball=(center, radius))
    f.coeffs = np.where(f.support_mask(), f.coeffs, 0.0)
    current = f.norm_l2()
    if current > 0:
        f.coeffs *= norm / current
    return f
