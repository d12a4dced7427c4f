"""Unions of lattice R^(1/2)-cubes organized in horizontal time strips."""

from dataclasses import dataclass, field

import numpy as np


@dataclass
class CubeUnion:
    """Set Y of lattice cubes in B(0,R) x [0,R].

    Cube indices are integer tuples; the last component is the strip
    (time) index.  The cube side is R / n_strips with n_strips ~ sqrt(R),
    so the strips tile [0,R] exactly.
    """

    R: float
    dim: int
    cubes: set = field(default_factory=set)

    def __post_init__(self):
        self.n_strips = int(round(np.sqrt(self.R)))
        self.side = self.R / self.n_strips
        self.n_cols = 2 * self.n_strips  # per spatial axis, covering [-R, R]
        for c in self.cubes:
            self._check(c)

    def _check(self, idx):
        if len(idx) != self.dim + 1:
            raise ValueError(f"cube index {idx} has wrong length")
        *spatial, it = idx
        if not 0 <= it < self.n_strips:
            raise ValueError(f"strip index {it} outside [0, {self.n_strips})")
        for ix in spatial:
            if not 0 <= ix < self.n_cols:
                raise ValueError(f"column index {ix} outside [0, {self.n_cols})")

    def add(self, idx):
        idx = tuple(int(i) for i in idx)
        self._check(idx)
        self.cubes.add(idx)

    def __len__(self):
        return len(self.cubes)

    def cube_bounds(self, idx):
        """((x_lo...), t_lo) corner of a cube in raw coordinates."""
        *spatial, it = idx
        x_lo = tuple(-self.R + ix * self.side for ix in spatial)
        return x_lo, it * self.side

    def per_strip_counts(self):
        counts = np.zeros(self.n_strips, dtype=int)
        for idx in self.cubes:
            counts[idx[-1]] += 1
        return counts

    def mask(self, grid, enlarge=1.0):
        """Boolean sample mask over grid's (space..., time) lattice."""
        if grid.R != self.R or grid.dim != self.dim:
            raise ValueError("grid does not match the cube union's box")
        x = grid.x_coords()
        t = grid.times()
        out = np.zeros(grid.space_shape + (grid.nt,), dtype=bool)
        half_extra = (enlarge - 1.0) * self.side / 2.0
        for idx in self.cubes:
            (x_lo, t_lo) = self.cube_bounds(idx)
            tsel = (t > t_lo - half_extra) & (t <= t_lo + self.side + half_extra)
            sels = [
                (x >= lo - half_extra) & (x < lo + self.side + half_extra)
                for lo in x_lo
            ]
            if self.dim == 1:
                out[np.ix_(sels[0], tsel)] = True
            else:
                out[np.ix_(sels[0], sels[1], tsel)] = True
        return out

    def measure(self):
        return len(self.cubes) * self.side ** (self.dim + 1)


def strip_occupancy(Y: CubeUnion):
    """(sigma, per-strip histogram, uniform flag: min >= sigma/2)."""
    counts = Y.per_strip_counts()
    sigma = int(counts.max()) if len(Y) else 0
    uniform = bool(len(Y)) and bool(counts.min() >= sigma / 2)
    return sigma, counts, uniform


def full_box_cubes(R, dim=1, x_range=None):
    """All cubes of the box; x_range=(lo, hi) restricts columns (raw coords)."""
    Y = CubeUnion(R=R, dim=dim)
    cols = range(Y.n_cols)
    if x_range is not None:
        lo, hi = x_range
        cols = [
            ix
            for ix in range(Y.n_cols)
            if -R + ix * Y.side >= lo - 1e-9 and -R + (ix + 1) * Y.side <= hi + 1e-9
        ]
    import itertools

    for spatial in itertools.product(cols, repeat=dim):
        for it in range(Y.n_strips):
            Y.add(spatial + (it,))
    return Y
