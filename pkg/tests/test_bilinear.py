import numpy as np
import pytest

from schrodlab.errors import PreconditionFailed
from schrodlab.fieldcore import make_grid, propagate
from schrodlab.strichartz import bil_decomposition_check, locally_constant_check
from schrodlab.experiments import _separated_packet_pair


def test_two_separated_tangent_caps():
    # both caps tangent-dominant: the bound must close via the Bil term
    K = 16
    npts = 50
    rng = np.random.default_rng(0)
    base = rng.standard_normal(npts) + 1j * rng.standard_normal(npts)
    u_tau = np.stack([base, base * np.exp(0.3j)])
    tang = u_tau.copy()                 # all tangent
    trans = np.zeros_like(u_tau)
    centers = np.array([0.0, 0.5])
    rep = bil_decomposition_check(u_tau, tang, trans, centers, K,
                                  min_pair_dist=0.25)
    assert rep.worst_constant <= 2.0 / K**10 * 10 + 1e-6  # Bil term huge vs |u|
    assert rep.n_excluded == 0


def test_all_transverse_reduces_to_triangle_inequality():
    K = 16
    npts = 200
    rng = np.random.default_rng(1)
    ntau = 6
    u_tau = rng.standard_normal((ntau, npts)) + 1j * rng.standard_normal((ntau, npts))
    tang = np.zeros_like(u_tau)
    trans = u_tau.copy()
    centers = np.linspace(0, 1, ntau)
    rep = bil_decomposition_check(u_tau, tang, trans, centers, K,
                                  min_pair_dist=0.1)
    # I covers every cap, so |u| = |sum trans| exactly: C = 1
    assert rep.worst_constant <= 1.0 + 1e-9


def test_random_synthetic_constant_bounded():
    K = 16
    npts = 10_000
    rng = np.random.default_rng(7)
    ntau = 8
    u_tau = rng.standard_normal((ntau, npts)) + 1j * rng.standard_normal((ntau, npts))
    split = rng.random((ntau, npts))
    tang = u_tau * split
    trans = u_tau * (1 - split)
    centers = np.linspace(0, 1, ntau)
    rep = bil_decomposition_check(u_tau, tang, trans, centers, K,
                                  min_pair_dist=0.2)
    assert rep.worst_constant <= 10.0
    assert rep.n_excluded < npts


def test_precondition_failure():
    K = 16
    u_tau = np.ones((2, 4), dtype=complex)
    u_tau[0] *= 100.0  # one cap dominates everywhere: never broad
    rep_args = (u_tau, u_tau * 0.5, u_tau * 0.5, np.array([0.0, 1.0]), K, 0.5)
    with pytest.raises(PreconditionFailed):
        bil_decomposition_check(*rep_args)


def test_locally_constant_property(rng):
    # band-limited bilinear products are morally constant on dual rectangles
    R = 256.0
    grid = make_grid(1, R)
    f1, f2 = _separated_packet_pair(grid, 3, rng)
    u1, u2 = propagate(f1), propagate(f2)
    prod = u1.values * u2.values
    # dual rectangle of the product's frequency box: ~1 x sqrt(R) in (x, t)
    rep = locally_constant_check(prod, grid, (2.0, np.sqrt(R)), enlarge=3.0)
    assert rep.n_tested > 0
    assert rep.worst_constant <= 25.0  # measured headroom; sup <= C avg
