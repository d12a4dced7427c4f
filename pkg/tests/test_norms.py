import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schrodlab.errors import EmptyRegion
from schrodlab.fieldcore import (
    MixedNormParams,
    full_box_mask,
    make_grid,
    mixed_norm,
    propagate,
    random_bandlimited,
)
from schrodlab.fieldcore.field import SpaceTimeField


def nested_loop_oracle(u, grid, mask, p, q):
    """Brute-force quadrature, scalar loops only."""
    space_idx = list(np.ndindex(grid.space_shape))
    acc_p = 0.0
    for sx in space_idx:
        acc_q = 0.0
        for it in range(u.shape[-1]):
            if mask[sx + (it,)]:
                acc_q += abs(u[sx + (it,)]) ** q * grid.dt
        acc_p += acc_q ** (p / q) * grid.cell_volume()
    return acc_p ** (1.0 / p)


def test_constant_field_on_disc():
    g = make_grid(2, 16)
    vals = np.ones(g.space_shape + (g.nt,), dtype=complex)
    u = SpaceTimeField(g, vals)
    p, q = 3.0, 2.0
    got = mixed_norm(u, MixedNormParams(p=p, q=q))
    want = (np.pi * g.R**2) ** (1 / p) * g.R ** (1 / q)
    # quadrature tolerance: jagged disc boundary, O(dx/R) relative in area
    assert abs(got - want) / want < (4 * g.dx / g.R) / p


def test_separable_indicator_lower_half_time():
    g = make_grid(2, 16)
    t = g.times()
    vals = np.zeros(g.space_shape + (g.nt,), dtype=complex)
    vals[..., t < g.R / 2] = 1.0
    u = SpaceTimeField(g, vals)
    p, q = 2.0, 4.0
    got = mixed_norm(u, MixedNormParams(p=p, q=q))
    want = (np.pi * g.R**2) ** (1 / p) * (g.R / 2) ** (1 / q)
    assert abs(got - want) / want < (4 * g.dx / g.R) / p


def test_matches_nested_loop_oracle(rng):
    g = make_grid(1, 16)
    f = random_bandlimited(g, rng)
    u = propagate(f, times=g.times()[::8])
    nt = u.values.shape[-1]
    mask = np.broadcast_to(g.ball_mask()[:, None], (g.nx, nt)).copy()
    for p, q in ((1.0, 1.0), (3.0, 2.0), (6.0, 6.0)):
        got = mixed_norm(u, MixedNormParams(p=p, q=q, region=mask))
        want = nested_loop_oracle(u.values, g, mask, p, q)
        assert abs(got - want) / want < 1e-12


def test_empty_region_raises():
    g = make_grid(1, 16)
    vals = np.ones((g.nx, g.nt), dtype=complex)
    u = SpaceTimeField(g, vals)
    empty = np.zeros((g.nx, g.nt), dtype=bool)
    with pytest.raises(EmptyRegion):
        mixed_norm(u, MixedNormParams(p=2, q=2, region=empty))


@settings(max_examples=20, deadline=None)
@given(
    q1=st.floats(min_value=1.0, max_value=64.0),
    q2=st.floats(min_value=1.0, max_value=64.0),
    seed=st.integers(min_value=0, max_value=10_000),
)
def test_normalized_monotonicity_in_q(q1, q2, seed):
    if q1 > q2:
        q1, q2 = q2, q1
    g = make_grid(1, 16)
    f = random_bandlimited(g, np.random.default_rng(seed))
    u = propagate(f)
    n1 = mixed_norm(u, MixedNormParams(p=3, q=q1))
    n2 = mixed_norm(u, MixedNormParams(p=3, q=q2))
    # power-mean inequality after normalizing out the interval length
    assert g.R ** (-1 / q1) * n1 <= g.R ** (-1 / q2) * n2 * (1 + 1e-12)


def test_sup_exponents():
    g = make_grid(1, 16)
    vals = np.ones((g.nx, g.nt), dtype=complex)
    vals[g.nx // 2, :] = 2.0
    vals[0, :] = 7.0  # outside B(0,R), must not be seen
    u = SpaceTimeField(g, vals)
    assert mixed_norm(u, MixedNormParams(p=math.inf, q=math.inf)) == 2.0


def test_full_box_mask_is_ball_times_times():
    g = make_grid(2, 16)
    m = full_box_mask(g)
    assert m.shape == g.space_shape + (g.nt,)
    assert np.array_equal(m[..., 0], g.ball_mask())
