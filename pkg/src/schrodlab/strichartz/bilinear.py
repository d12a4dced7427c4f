"""Pointwise broad/narrow decomposition check and the locally-constant test."""

from dataclasses import dataclass

import numpy as np

from ..errors import PreconditionFailed


@dataclass
class BilDecompositionReport:
    worst_constant: float
    n_points: int
    n_excluded: int       # points failing the broadness hypothesis


def bil_decomposition_check(u_tau, tang, trans, tau_centers, K, min_pair_dist,
                            broadness=None):
    """Verify |u| <= C (|sum_{tau in I} trans_tau| + K^10 Bil(tang)) pointwise.

    u_tau, tang, trans: arrays of shape (n_tau, n_points) with
    u_tau = tang + trans per cap; I is chosen per point as the caps whose
    tangent part is below K^-10 |u|, and Bil maximizes the geometric mean
    of tangent parts over cap pairs at distance >= min_pair_dist.

    Points violating the broadness hypothesis max_tau |u_tau| <= b |u|
    (b defaults to K^(-1/2)) are excluded and counted.
    """
    u_tau = np.asarray(u_tau)
    tang = np.asarray(tang)
    trans = np.asarray(trans)
    centers = np.asarray(tau_centers, dtype=float)
    if centers.ndim == 1:
        centers = centers[:, None]
    ntau, npts = u_tau.shape
    if broadness is None:
        broadness = K ** (-0.5)

    u = u_tau.sum(axis=0)
    absu = np.abs(u)
    broad = np.max(np.abs(u_tau), axis=0) <= broadness * absu
    broad &= absu > 0
    n_excluded = int(npts - broad.sum())
    if not broad.any():
        raise PreconditionFailed("broadness hypothesis failed at every point")

    pair_ok = (
        np.linalg.norm(centers[:, None, :] - centers[None, :, :], axis=-1)
        >= min_pair_dist
    )
    at = np.abs(tang)
    worst = 0.0
    idx = np.flatnonzero(broad)
    for j in idx:
        in_I = at[:, j] <= K ** (-10.0) * absu[j]
        linear = np.abs(trans[in_I, j].sum())
        gm = np.sqrt(at[:, j][:, None] * at[None, :, j])
        bil = np.max(np.where(pair_ok, gm, 0.0))
        rhs = linear + K**10.0 * bil
        if rhs == 0:
            continue
        worst = max(worst, absu[j] / rhs)
    return BilDecompositionReport(
        worst_constant=float(worst), n_points=npts, n_excluded=n_excluded
    )


@dataclass
class LocallyConstantReport:
    worst_constant: float
    n_rectangles: int
    n_tested: int


def locally_constant_check(values, grid, rect_dims, enlarge=2.0,
                           significance=1e-3):
    """sup over axis-aligned rectangles vs average over their enlargement.

    values: samples over (space..., time); rect_dims: per-axis widths
    (space..., time) in raw units.  Rectangles whose sup is below
    significance * global max are skipped as tail.  Returns the worst
    sup/avg constant over the tested tiling.
    """
    absv = np.abs(values)
    shape = absv.shape
    steps = [grid.dx] * grid.dim + [grid.dt]
    counts = [max(1, int(round(w / s))) for w, s in zip(rect_dims, steps)]
    gmax = absv.max()
    worst = 0.0
    tested = 0
    total = 0
    ranges = [range(0, shape[a], counts[a]) for a in range(len(shape))]
    import itertools

    for corner in itertools.product(*ranges):
        total += 1
        sl = tuple(
            slice(corner[a], min(corner[a] + counts[a], shape[a]))
            for a in range(len(shape))
        )
        local_sup = absv[sl].max()
        if local_sup < significance * gmax:
            continue
        big = tuple(
            slice(
                max(0, corner[a] - int((enlarge - 1) / 2 * counts[a])),
                min(shape[a], corner[a] + counts[a] + int((enlarge - 1) / 2 * counts[a])),
            )
            for a in range(len(shape))
        )
        avg = absv[big].mean()
        if avg > 0:
            worst = max(worst, local_sup / avg)
            tested += 1
    return LocallyConstantReport(
        worst_constant=float(worst), n_rectangles=total, n_tested=tested
    )
