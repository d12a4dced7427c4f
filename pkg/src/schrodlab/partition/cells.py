"""Iterated bisection into sign-vector cells of comparable mass."""

from dataclasses import dataclass

import numpy as np

from ..errors import BisectionNotFound
from .hamsandwich import TIE_TOL, build_layout, ham_sandwich_bisect, mixed_mass
from .poly import PartitionPolynomial, Poly, poly_space_dim, grid_points


@dataclass
class Cell:
    """One sign-vector region of the partition complement."""

    sign_vector: tuple
    mass: float          # L1_x L^r_t mass of the restricted weight
    point_mass: float    # additive grid mass, for exact completeness checks
    grid_mask: np.ndarray

    def mask_rle(self):
        """Run-length encoding of the flattened mask: [start, length, ...]."""
        flat = self.grid_mask.reshape(-1)
        edges = np.flatnonzero(np.diff(np.concatenate([[0], flat.view(np.int8), [0]])))
        starts, ends = edges[::2], edges[1::2]
        out = np.empty(2 * len(starts), dtype=int)
        out[0::2] = starts
        out[1::2] = ends - starts
        return out.tolist()


def degree_schedule(nvars, D):
    """Per-step degree caps: step k bisects 2^(k-1) weights, needing a
    polynomial space of dimension >= 2^(k-1) + 1; stop when the cumulative
    product degree would exceed D."""
    caps = []
    total = 0
    k = 1
    while True:
        need = 2 ** (k - 1) + 1
        cap = 1
        while poly_space_dim(nvars, cap) < need:
            cap += 1
        if total + cap > D:
            break
        caps.append(cap)
        total += cap
        k += 1
    return caps


def polynomial_partition(W, grid, D, r=2.0, tol=1e-3, seed=0, max_restarts=64):
    """Partition the mass W over B(0,R) x [0,R] by a degree <= D product.

    Returns (PartitionPolynomial, list of Cell).  Each of the 2^s cells
    carries at least (1 - s*tol) * 2^-s of the total L1L^r mass.
    """
    W = np.asarray(W, dtype=float)
    nvars = grid.dim + 1
    caps = degree_schedule(nvars, D)
    if not caps:
        raise ValueError(f"degree bound D={D} admits no bisection step")
    scale = grid.R

    nspace = int(np.prod(grid.space_shape))
    Wflat = W.reshape(nspace, grid.nt)
    masks = [np.ones_like(Wflat, dtype=bool)]
    factors = []
    pts_scaled = grid_points(grid) / scale

    for k, cap in enumerate(caps, start=1):
        weights = [Wflat * m for m in masks]
        attempt = 0
        while True:
            try:
                poly = ham_sandwich_bisect(
                    weights,
                    grid,
                    basis_degree_cap=cap,
                    r=r,
                    scale=scale,
                    tol=tol,
                    max_restarts=max_restarts,
                    seed=seed + 101 * k + 9973 * attempt,
                )
            except BisectionNotFound as exc:
                raise BisectionNotFound(str(exc), step=k) from exc
            if _nonsingular_on_samples(poly, pts_scaled):
                break
            attempt += 1
            if attempt >= 8:
                raise BisectionNotFound(
                    "factor kept a singular sampled zero set", step=k
                )
        factors.append(poly)
        vals = poly(pts_scaled)
        new_masks = []
        for m in masks:
            new_masks.append(m & (vals > TIE_TOL))
            new_masks.append(m & (vals < -TIE_TOL))
        masks = new_masks

    P = PartitionPolynomial(
        factors=factors, degree_bound=D, n=grid.dim, scale=scale
    )
    layout = build_layout([Wflat], grid, r, scale)
    wr = layout.weights_r[0]
    cells = []
    s = len(factors)
    for i, m in enumerate(masks):
        sign_vector = tuple(1 - 2 * ((i >> (s - 1 - b)) & 1) for b in range(s))
        cells.append(
            Cell(
                sign_vector=sign_vector,
                mass=mixed_mass(wr, m, grid.dt, grid.cell_volume(), r),
                point_mass=float(np.sum(Wflat[m])),
                grid_mask=m.reshape(W.shape),
            )
        )
    return P, cells


def _nonsingular_on_samples(poly, pts_scaled, gradient_floor=1e-8):
    vals = poly(pts_scaled)
    scale = np.max(np.abs(vals))
    if scale == 0:
        return False
    near = np.abs(vals) < 1e-3 * scale
    if not near.any():
        return True
    g = poly.gradient(pts_scaled[near])
    return bool(np.min(np.linalg.norm(g, axis=-1)) > gradient_floor)


def balance_report(cells, r_total_mass):
    """Max over cells of total/cell mass (the D^(n+1)-style balance factor)."""
    worst = max(r_total_mass / c.mass for c in cells if c.mass > 0)
    shares = [c.mass / r_total_mass for c in cells]
    return {"worst_ratio": worst, "min_share": min(shares), "shares": shares}
