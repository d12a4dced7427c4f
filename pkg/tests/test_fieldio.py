import numpy as np

from schrodlab.fieldcore import make_grid, propagate, random_bandlimited
from schrodlab.fieldcore.io import (
    load_spacetime,
    load_spectral,
    save_spacetime,
    save_spectral,
    spectral_from_json,
    spectral_to_json,
)


def test_spacetime_roundtrip(tmp_path, rng):
    g = make_grid(1, 16)
    u = propagate(random_bandlimited(g, rng))
    p = tmp_path / "u.stf"
    save_spacetime(p, u)
    v = load_spacetime(p)
    assert v.grid == g
    assert np.array_equal(v.values, u.values)


def test_spectral_roundtrip(tmp_path, rng):
    g = make_grid(2, 16)
    f = random_bandlimited(g, rng, center=(0.25, -0.5), radius=0.4)
    p = tmp_path / "f.spf"
    save_spectral(p, f)
    f2 = load_spectral(p)
    assert f2.grid == g
    assert np.array_equal(f2.coeffs, f.coeffs)
    assert f2.support_ball == f.support_ball


def test_header_layout(tmp_path, rng):
    g = make_grid(1, 16)
    f = random_bandlimited(g, rng)
    p = tmp_path / "f.spf"
    save_spectral(p, f)
    raw = p.read_bytes()
    dim = int(np.frombuffer(raw[:8], dtype="<i8")[0])
    R, L = np.frombuffer(raw[8:24], dtype="<f8")
    nx, nt = np.frombuffer(raw[24:40], dtype="<i8")
    assert (dim, R, L, nx, nt) == (1, 16.0, 64.0, g.nx, g.nt)


def test_json_roundtrip(rng):
    g = make_grid(1, 16)
    f = random_bandlimited(g, rng, radius=0.7)
    f2 = spectral_from_json(spectral_to_json(f))
    assert np.allclose(f2.coeffs, f.coeffs)
    assert f2.support_ball == f.support_ball
