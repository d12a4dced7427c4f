import numpy as np
import pytest

from schrodlab.fieldcore import make_grid, random_bandlimited


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


@pytest.fixture
def grid1d_small():
    return make_grid(1, 64)


@pytest.fixture
def grid1d():
    return make_grid(1, 256)


@pytest.fixture
def grid2d_small():
    return make_grid(2, 16)


def random_field(grid, rng, radius=1.0, center=None):
    return random_bandlimited(grid, rng, center=center, radius=radius)
