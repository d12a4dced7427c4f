import numpy as np
import pytest

from schrodlab.errors import BisectionNotFound
from schrodlab.fieldcore import make_grid
from schrodlab.partition import ham_sandwich_bisect
from schrodlab.partition.hamsandwich import _eval_basis, build_layout, signed_differences


def residual(poly, weights, grid, r):
    layout = build_layout(weights, grid, r, grid.R)
    vals = _eval_basis(poly.exponents, layout.pts) @ poly.coeffs
    g = signed_differences(vals, layout)
    return np.max(np.abs(g) / np.array(layout.totals))


def test_even_weight_gives_coordinate_plane(rng):
    g = make_grid(1, 64)
    # even about x = 0 on the grid: pair index 64+m with 64-m; the unpaired
    # x = -L/2 sample gets zero weight, and x = 0 is a wall tie under P = x
    half = rng.random(g.nx // 2 - 1) + 0.1
    prof = np.zeros(g.nx)
    prof[g.nx // 2] = 1.0
    prof[g.nx // 2 + 1 :] = half
    prof[1 : g.nx // 2] = half[::-1]
    W = prof[:, None] * np.ones((1, g.nt))
    poly = ham_sandwich_bisect([W], g, basis_degree_cap=1, r=2.0, seed=0)
    # P = x1 up to sign and normalization
    assert abs(poly.coeffs[1]) > 0.999
    assert abs(poly.coeffs[0]) < 1e-9
    assert residual(poly, [W], g, 2.0) <= 1e-12


def test_uniform_box_median_matches_sort_oracle(rng):
    g = make_grid(1, 64)
    W = rng.random((g.nx, g.nt)) + 0.25
    poly = ham_sandwich_bisect([W], g, basis_degree_cap=1, r=1.0, seed=0)
    assert residual(poly, [W], g, 1.0) <= 1e-3
    # oracle: weighted median of the x-marginal by cumulative sort
    marginal = W.sum(axis=1)
    x = g.x_coords()
    csum = np.cumsum(marginal)
    median = x[np.searchsorted(csum, csum[-1] / 2)]
    plane_x = -poly.coeffs[0] / poly.coeffs[1] * g.R
    assert abs(plane_x - median) <= 4 * g.dx


def test_two_disjoint_balls_bisected(rng):
    # oversampled grid so single-cell mass jumps sit well below the
    # bisection tolerance for these small indicator balls
    g = make_grid(1, 64, oversample=2)
    x = g.x_coords()
    t = g.times()
    X, T = np.meshgrid(x, t, indexing="ij")
    w1 = ((X + 30) ** 2 + (T - 20) ** 2 <= 15**2).astype(float)
    w2 = ((X - 35) ** 2 + (T - 45) ** 2 <= 12**2).astype(float)
    poly = ham_sandwich_bisect([w1, w2], g, basis_degree_cap=1, r=1.0, seed=0)
    # oracle: direct half-space mass sums
    pts = np.stack([X, T], axis=-1) / g.R
    vals = _eval_basis(poly.exponents, pts) @ poly.coeffs
    for w in (w1, w2):
        plus = w[vals > 0].sum()
        minus = w[vals < 0].sum()
        assert abs(plus - minus) / w.sum() <= 2e-3


def test_zero_mass_weight_rejected():
    g = make_grid(1, 16)
    with pytest.raises(ValueError):
        ham_sandwich_bisect([np.zeros((g.nx, g.nt))], g, basis_degree_cap=1)


def test_too_small_basis_rejected(rng):
    g = make_grid(1, 16)
    W = [rng.random((g.nx, g.nt)) for _ in range(7)]
    with pytest.raises(ValueError):
        ham_sandwich_bisect(W, g, basis_degree_cap=1)


def test_four_weights_need_quadratics(rng):
    g = make_grid(1, 32, oversample=2)
    x = g.x_coords()
    t = g.times()
    X, T = np.meshgrid(x, t, indexing="ij")
    weights = []
    for cx, ct in ((-60, 8), (-20, 24), (20, 8), (60, 24)):
        weights.append(np.exp(-((X - cx) ** 2 + 4 * (T - ct) ** 2) / 600.0))
    poly = ham_sandwich_bisect(weights, g, basis_degree_cap=2, r=2.0, seed=0)
    assert residual(poly, weights, g, 2.0) <= 1e-3
