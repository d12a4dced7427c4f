import numpy as np
import pytest

from schrodlab.errors import BadSupport
from schrodlab.fieldcore import (
    SpectralField,
    expected_norm_ratio,
    make_grid,
    norm_transport_check,
    parabolic_rescale,
    random_bandlimited,
)


def gaussian_field(grid, xi0, width, cutoff):
    k = grid.freqs()
    if grid.dim == 1:
        d2 = (k - xi0[0]) ** 2
    else:
        d2 = (k[:, None] - xi0[0]) ** 2 + (k[None, :] - xi0[1]) ** 2
    coeffs = np.exp(-d2 / width**2) * (d2 <= cutoff**2)
    return SpectralField(grid, coeffs, support_ball=(tuple(xi0), cutoff))


def test_identity_when_M_is_one(rng):
    g = make_grid(1, 64)
    f = random_bandlimited(g, rng)
    gout, rmap = parabolic_rescale(f, (0.0,), 1.0)
    assert np.allclose(gout.coeffs, f.coeffs)
    assert gout.grid == g
    y, r = rmap.forward(np.array([3.0]), 2.0)
    assert np.allclose(y, 3.0) and r == 2.0


def test_l2_preserved(rng):
    g = make_grid(2, 16)
    f = gaussian_field(g, np.array([0.25, -0.125]), 0.05, 0.2)
    gout, _ = parabolic_rescale(f, (0.25, -0.125), 4.0)
    assert abs(gout.norm_l2() - f.norm_l2()) / f.norm_l2() < 1e-10
    assert gout.support_leakage() < 1e-10


def test_bad_support_rejected(rng):
    g = make_grid(1, 64)
    f = random_bandlimited(g, rng)  # fills all of B(0,1)
    with pytest.raises(BadSupport):
        parabolic_rescale(f, (0.0,), 8.0)


def test_tube_direction_maps_by_recentering():
    g = make_grid(2, 16)
    f = gaussian_field(g, np.array([0.25, 0.0]), 0.04, 0.2)
    _, rmap = parabolic_rescale(f, (0.25, 0.0), 4.0)
    c_theta = np.array([0.3, 0.05])
    mapped = rmap.map_tube_center(c_theta)
    assert np.allclose(mapped, 4.0 * (c_theta - np.array(rmap.xi0)))
    # the central line x(t) = x0 - 2 t c(theta) lands on y(r) = y0 - 2 r c'
    x0 = np.array([5.0, -3.0])
    for t in (0.0, 4.0, 16.0):
        y, r = rmap.forward(x0 - 2 * t * c_theta, t)
        y0, _ = rmap.forward(x0, 0.0)
        assert np.allclose(y, y0 - 2 * r * mapped, atol=1e-12)


def test_norm_ratio_matches_prediction_n2():
    # paper value M^(4/p - 1): for p = 6 the ratio is M^(-1/3)
    g = make_grid(2, 64, nt=128)
    xi0 = np.array([0.2, -0.15])
    f = gaussian_field(g, xi0, 0.05, 0.24)
    for M in (2.0, 4.0):
        out = norm_transport_check(f, xi0, M, p=6)
        assert abs(out["ratio"] - out["expected"]) / out["expected"] < 1e-3
        assert out["expected"] == pytest.approx(M ** (-1 / 3))


def test_expected_ratio_formula():
    assert expected_norm_ratio(4.0, 6, 2) == pytest.approx(4.0 ** (-1 / 3))
    assert expected_norm_ratio(3.0, 2, 2) == pytest.approx(3.0)
