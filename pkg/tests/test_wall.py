import numpy as np
import pytest

from schrodlab.fieldcore import make_grid
from schrodlab.partition import (
    PartitionPolynomial,
    Poly,
    graded_monomials,
    wall_region,
    zero_point_cloud,
)
from schrodlab.partition.poly import grid_points


@pytest.fixture(scope="module")
def grid32():
    return make_grid(2, 32)


def slab_poly(grid):
    mono = graded_monomials(3, 1)
    return PartitionPolynomial(
        [Poly(mono[[1]], np.array([1.0]))], 1, 2, grid.R
    )  # P = x1/R


def test_plane_gives_slab(grid32):
    g = grid32
    w = wall_region(slab_poly(g), g, delta=0.05)
    width = g.R ** (0.55)
    x = g.x_coords()
    expect = np.abs(x)[:, None, None] <= width + w.resolution
    inner = np.abs(x)[:, None, None] <= width - w.resolution
    assert np.all(w.mask <= np.broadcast_to(expect, w.mask.shape))
    assert np.all(np.broadcast_to(inner, w.mask.shape) <= w.mask)


def test_wall_monotone_in_width(grid32):
    g = grid32
    w1 = wall_region(slab_poly(g), g, delta=0.02)
    w2 = wall_region(slab_poly(g), g, delta=0.10)
    assert w1.width < w2.width
    assert np.all(w1.mask <= w2.mask)


def test_mask_matches_bruteforce_distance(grid32, rng):
    g = grid32
    # curved factor: x1^2 + x2^2 - (0.5 R)^2-ish in scaled coords
    mono = graded_monomials(3, 2)
    expo = [tuple(e) for e in mono.tolist()]
    i_c = expo.index((0, 0, 0))
    i_x2 = expo.index((2, 0, 0))
    i_y2 = expo.index((0, 2, 0))
    coeffs = np.zeros(len(mono))
    coeffs[i_c] = -0.25
    coeffs[i_x2] = 1.0
    coeffs[i_y2] = 1.0
    P = PartitionPolynomial([Poly(mono, coeffs)], 2, 2, g.R)
    w = wall_region(P, g, delta=0.05)

    pts = grid_points(g).reshape(-1, 3)
    idx = rng.integers(0, len(pts), size=10_000)
    sample = pts[idx]
    flat_mask = w.mask.reshape(-1)[idx]
    # oracle: distance to the dense zero cloud by brute force
    for p, m in zip(sample[:200], flat_mask[:200]):
        d = np.min(np.linalg.norm(w.cloud - p[None, :], axis=1))
        if d <= w.width - 2 * w.resolution:
            assert m
        if d >= w.width + 2 * w.resolution:
            assert not m


def test_empty_zero_set_gives_empty_wall(grid32):
    g = grid32
    mono = graded_monomials(3, 1)
    P = PartitionPolynomial([Poly(mono[[0]], np.array([5.0]))], 1, 2, g.R)
    w = wall_region(P, g, delta=0.05)
    assert not w.mask.any()
    assert len(w.cloud) == 0
