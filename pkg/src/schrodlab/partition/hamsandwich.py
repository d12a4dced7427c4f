"""Numerical ham-sandwich bisection of mixed-norm masses.

Borsuk-Ulam guarantees a bisecting polynomial exists in the continuum; the
solver here replaces that existence argument with an honest search: exact
angle bisection when one weight is cut, damped least-squares (LM-style)
with seeded random restarts for several weights, and a declared
BisectionNotFound when the search fails.
"""

from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares

from ..errors import BisectionNotFound
from .poly import Poly, graded_monomials, poly_space_dim

TIE_TOL = 1e-12


@dataclass
class MassLayout:
    """Flattened weights plus the scaled sample coordinates."""

    pts: np.ndarray        # (nspace, nt, nvars) scaled coords
    dt: float
    dxn: float
    r: float
    weights_r: list        # W^r arrays, shape (nspace, nt)
    totals: list           # L1 L^r masses of the full weights


def build_layout(weights, grid, r, scale):
    from .poly import grid_points

    pts = grid_points(grid) / scale
    dxn = grid.cell_volume()
    wr = []
    totals = []
    for w in weights:
        w = np.asarray(w, dtype=float).reshape(pts.shape[0], pts.shape[1])
        if np.any(w < 0):
            raise ValueError("weights must be nonnegative")
        wr.append(w**r)
        totals.append(mixed_mass(w**r, np.ones_like(w, dtype=bool), grid.dt, dxn, r))
    if min(totals) <= 0:
        raise ValueError("every weight must have positive mass")
    return MassLayout(pts=pts, dt=grid.dt, dxn=dxn, r=r, weights_r=wr, totals=totals)


def mixed_mass(w_r, mask, dt, dxn, r):
    """L1_x L^r_t mass of a masked weight, from the precomputed W^r."""
    inner = (np.sum(w_r * mask, axis=1) * dt) ** (1.0 / r)
    return float(np.sum(inner) * dxn)


def signed_differences(pvals, layout):
    """G_j(P) = mass(P>0) - mass(P<0) for each weight."""
    pos = pvals > TIE_TOL
    neg = pvals < -TIE_TOL
    out = np.empty(len(layout.weights_r))
    for j, wr in enumerate(layout.weights_r):
        out[j] = mixed_mass(wr, pos, layout.dt, layout.dxn, layout.r) - mixed_mass(
            wr, neg, layout.dt, layout.dxn, layout.r
        )
    return out


def _eval_basis(exponents, pts):
    """Matrix of monomial values, shape pts.shape[:-1] + (nmono,)."""
    cols = []
    for e in exponents:
        term = np.ones(pts.shape[:-1])
        for v, p in enumerate(e):
            if p:
                term = term * pts[..., v] ** p
        cols.append(term)
    return np.stack(cols, axis=-1)


def ham_sandwich_bisect(
    weights,
    grid,
    basis_degree_cap,
    r=2.0,
    scale=None,
    tol=1e-3,
    max_restarts=64,
    seed=0,
):
    """One polynomial whose zero set bisects every weight's L1L^r mass.

    weights: nonnegative arrays over the grid's (space..., time) samples.
    Returns a Poly in scaled coordinates, unit coefficient norm, with
    |G_j| <= tol * mass_j for all j.
    """
    nvars = grid.dim + 1
    N = len(weights)
    full_dim = poly_space_dim(nvars, basis_degree_cap)
    if full_dim < N + 1:
        raise ValueError("polynomial space too small for this many weights")
    if scale is None:
        scale = grid.R
    layout = build_layout(weights, grid, r, scale)
    all_exponents = graded_monomials(nvars, basis_degree_cap)
    totals = np.array(layout.totals)

    def make_gfun(basis):
        def gfun(c):
            return signed_differences(basis @ c, layout) / totals

        return gfun

    best = (np.inf, None, None)
    rng = np.random.default_rng(seed)

    if N == 1:
        # exact angle bisection over {1, u1}; sufficient whenever the mass
        # is balanced at whole-column granularity (e.g. symmetric weights)
        exps = all_exponents[:2]
        gfun = make_gfun(_eval_basis(exps, layout.pts))
        c = _bisect_circle(gfun)
        err = np.max(np.abs(gfun(c)))
        if err <= tol:
            return Poly(exps, c).normalized()
        best = (err, c, exps)

    # damped least-squares on the coefficient sphere; one extra monomial
    # beyond N+1 lets the zero set sweep single grid cells, so the jump
    # granularity of G is far below the tolerance
    n_coeff = min(full_dim, N + 2)
    exps = all_exponents[:n_coeff]
    gfun = make_gfun(_eval_basis(exps, layout.pts))
    method = "lm" if n_coeff <= N + 1 else "trf"

    def resid(c):
        return np.concatenate([gfun(c), [np.dot(c, c) - 1.0]])

    seeds = []
    if best[1] is not None:
        warm = np.zeros(n_coeff)
        warm[: len(best[1])] = best[1]
        for tilt in (1e-3, -1e-3, 1e-2, -1e-2):
            w = warm.copy()
            w[-1] = tilt
            seeds.append(w / np.linalg.norm(w))
    seeds.extend(_centroid_seeds(layout, exps, rng, count=max_restarts))
    seeds.extend(_through_centroids_seeds(layout, exps, rng, count=2 * max_restarts))
    while len(seeds) < 8 * max_restarts:
        x0 = rng.standard_normal(n_coeff)
        seeds.append(x0 / np.linalg.norm(x0))
    # rank candidates by residual first: seeds whose zero set misses the
    # mass entirely sit on a flat plateau of G and would stall the solver
    seeds.sort(key=lambda c: np.max(np.abs(gfun(c))))

    for x0 in seeds[:max_restarts]:
        c = x0
        err = np.inf
        # coarse-to-fine difference steps: the coarse pass secant-averages
        # across the cell-level jumps of G, the fine passes polish
        for step in (1e-2, 1e-3, 1e-4):
            sol = least_squares(
                resid,
                c,
                method=method,
                diff_step=step,
                xtol=1e-14,
                ftol=1e-14,
                gtol=1e-14,
                max_nfev=400,
            )
            c = sol.x / np.linalg.norm(sol.x)
            err = np.max(np.abs(gfun(c)))
            if err <= tol:
                return Poly(exps, c).normalized()
            if err > 20 * tol:
                break
        if err < best[0]:
            best = (err, c, exps)
    raise BisectionNotFound(
        f"no bisecting polynomial after {max_restarts} restarts "
        f"(best residual {best[0]:.2e} vs tol {tol})",
        step=None,
    )


def _centroid_seeds(layout, exponents, rng, count):
    """Hyperplane-style seeds passing through the joint mass centroid;
    these always cut the support and so start off the flat plateaus."""
    nvars = layout.pts.shape[-1]
    n_coeff = len(exponents)
    linear_rows = [
        i
        for i, e in enumerate(exponents)
        if e.sum() == 1
    ]
    const_rows = [i for i, e in enumerate(exponents) if e.sum() == 0]
    if not linear_rows or not const_rows:
        return []
    total_w = sum(w.sum() for w in layout.weights_r)
    if total_w <= 0:
        return []
    centroid = np.zeros(nvars)
    for w in layout.weights_r:
        centroid += np.tensordot(w, layout.pts, axes=([0, 1], [0, 1]))
    centroid /= total_w
    seeds = []
    for _ in range(count):
        c = np.zeros(n_coeff)
        normal = rng.standard_normal(len(linear_rows))
        normal /= np.linalg.norm(normal)
        offset = 0.0
        for i, row in enumerate(linear_rows):
            var = int(np.argmax(exponents[row]))
            c[row] = normal[i]
            offset += normal[i] * centroid[var]
        c[const_rows[0]] = -offset
        norm = np.linalg.norm(c)
        if norm > 0:
            seeds.append(c / norm)
    return seeds


def _through_centroids_seeds(layout, exponents, rng, count):
    """Seeds vanishing at every weight's own centroid: a bisector must cut
    through each mass, and the null space of the centroid-evaluation matrix
    parametrizes exactly the candidates that do."""
    centroids = []
    for w in layout.weights_r:
        tw = w.sum()
        if tw <= 0:
            return []
        centroids.append(
            np.tensordot(w, layout.pts, axes=([0, 1], [0, 1])) / tw
        )
    A = _eval_basis(exponents, np.array(centroids))  # (N, n_coeff)
    _, s, vt = np.linalg.svd(A)
    null_dim = len(exponents) - int(np.sum(s > 1e-10 * s.max()))
    if null_dim <= 0:
        return []
    null_basis = vt[-null_dim:]
    seeds = []
    for _ in range(count):
        mix = rng.standard_normal(null_dim)
        c = mix @ null_basis
        norm = np.linalg.norm(c)
        if norm > 0:
            seeds.append(c / norm)
    return seeds


def _bisect_circle(gfun, iters=200):
    """Exact 1D solve on the unit circle of a 2D coefficient space.

    g(angle+pi) = -g(angle), so a sign change exists on [0, pi)."""

    def g(angle):
        return gfun(np.array([np.cos(angle), np.sin(angle)]))[0]

    coarse = np.linspace(0.0, np.pi, 65)
    vals = [g(a) for a in coarse]
    lo = hi = None
    for i in range(len(coarse) - 1):
        if vals[i] == 0.0:
            a = coarse[i]
            return np.array([np.cos(a), np.sin(a)])
        if vals[i] * vals[i + 1] < 0:
            lo, hi = coarse[i], coarse[i + 1]
            glo = vals[i]
            break
    else:
        # g(pi) = -g(0): the change straddles the endpoint
        lo, hi = coarse[-2], np.pi
        glo = vals[-2]
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        if gm == 0.0:
            lo = hi = mid
            break
        if glo * gm < 0:
            hi = mid
        else:
            lo, glo = mid, gm
    best = min(
        (abs(g(a)), a) for a in (lo, hi, 0.5 * (lo + hi))
    )[1]
    return np.array([np.cos(best), np.sin(best)])
