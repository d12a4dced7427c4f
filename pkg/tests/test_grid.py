import numpy as np
import pytest

from schrodlab.errors import GridTooCoarse
from schrodlab.fieldcore import GridSpec, make_grid


def test_make_grid_resolves_unit_ball():
    g = make_grid(1, 256)
    assert g.L == 1024
    assert g.nx >= g.L / np.pi
    assert g.nt >= g.nx
    assert g.nyquist >= 1.0


def test_nyquist_violation_rejected():
    with pytest.raises(GridTooCoarse):
        GridSpec(dim=1, R=256, L=1024, nx=256, nt=256)


def test_time_grid_covers_half_open_interval():
    g = make_grid(1, 64)
    t = g.times()
    assert t[0] > 0
    assert t[-1] == pytest.approx(g.R)
    assert len(t) == g.nt


def test_x_grid_centered():
    g = make_grid(1, 64)
    x = g.x_coords()
    assert x[g.nx // 2] == 0.0
    assert x[0] == -g.L / 2


def test_ball_mask_2d_area():
    g = make_grid(2, 16)
    area = g.ball_mask().sum() * g.cell_volume()
    assert abs(area - np.pi * g.R**2) / (np.pi * g.R**2) < 4 * g.dx / g.R


def test_nt_must_dominate_nx():
    with pytest.raises(ValueError):
        GridSpec(dim=1, R=64, L=256, nx=128, nt=64)
