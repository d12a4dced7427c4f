"""Tube-to-cell incidence and the orthogonality budget."""

from dataclasses import dataclass

import numpy as np


@dataclass
class IncidenceReport:
    cells_per_tube: list       # list of sets of cell indices
    max_cells: int
    bound: int                 # D + 1
    violations: int
    budget_ratio: float = None # sum_i ||f_i||^2 / (D ||f||^2), when computed


def tube_cells(tube, P, wall, grid, nsamples=512):
    """Cell indices (sign-vector ids) the tube's central line enters,
    after removing the wall and clipping to the spatial ball."""
    ts = np.linspace(0.0, tube.length, nsamples)
    axis = tube.axis_point(ts)
    pts = np.concatenate([axis, ts[:, None]], axis=1)
    if grid.dim == 1:
        inside = np.abs(pts[:, 0]) <= grid.R
    else:
        inside = np.linalg.norm(pts[:, :-1], axis=1) <= grid.R
    pts = pts[inside]
    if len(pts) == 0:
        return set()

    # wall lookup at the nearest grid sample
    xi = np.clip(
        np.round((pts[:, :-1] + grid.L / 2) / grid.dx).astype(int), 0, grid.nx - 1
    )
    ti = np.clip(np.round(pts[:, -1] / grid.dt).astype(int) - 1, 0, grid.nt - 1)
    if grid.dim == 1:
        walled = wall.mask[xi[:, 0], ti]
    else:
        walled = wall.mask[xi[:, 0], xi[:, 1], ti]
    pts = pts[~walled]
    if len(pts) == 0:
        return set()

    signs = P.sign_vectors(pts)
    ok = np.all(signs != 0, axis=0)
    return {tuple(sv) for sv in signs[:, ok].T}


def tube_cell_incidence(tubes, P, wall, grid, cells=None) -> IncidenceReport:
    """Per-tube visited cells with the deg(P)+1 crossing bound enforced."""
    D = P.degree
    out = []
    violations = 0
    index = None
    if cells is not None:
        index = {c.sign_vector: i for i, c in enumerate(cells)}
    for tube in tubes:
        svs = tube_cells(tube, P, wall, grid)
        ids = (
            {index[sv] for sv in svs if sv in index} if index is not None else svs
        )
        out.append(ids)
        if len(ids) > D + 1:
            violations += 1
    return IncidenceReport(
        cells_per_tube=out,
        max_cells=max((len(c) for c in out), default=0),
        bound=D + 1,
        violations=violations,
    )


def orthogonality_budget(cset, delta, P, wall, cells):
    """sum_i ||f_i||_2^2 against D ||f||_2^2, with f_i synthesized from the
    tiles whose tubes enter cell i."""
    from ..wavepacket import reconstruct, tube_of

    frame = cset.frame
    grid = frame.grid
    tiles = list(cset.tiles())
    tubes = [tube_of(t, delta) for t, _ in tiles]
    report = tube_cell_incidence(tubes, P, wall, grid, cells=cells)

    total = 0.0
    for i in range(len(cells)):
        keep_keys = {
            id(tiles[j][0]) for j in range(len(tiles)) if i in report.cells_per_tube[j]
        }
        if not keep_keys:
            continue
        wanted = [tiles[j][0] for j in range(len(tiles)) if i in report.cells_per_tube[j]]
        wanted_set = {(t.theta_center, t.nu_center) for t in wanted}
        sub = cset.subset(lambda t: (t.theta_center, t.nu_center) in wanted_set)
        fi = reconstruct(sub)
        total += fi.norm_l2() ** 2
    D = P.degree
    ratio = total / (D * cset.source_norm**2)
    report.budget_ratio = ratio
    return report
