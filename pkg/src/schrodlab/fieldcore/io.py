"""Flat binary and JSON serialization of fields.

Binary container layout (all little-endian 64-bit):

    int64 dim | float64 R | float64 L | int64 nx | int64 nt | payload

Space-time payload: interleaved re/im float64 pairs, x-major then t
(C order of shape (nx,)*dim + (nt,)).  Spectral files carry the support
ball (dim floats + radius) between header and payload, and the payload is
the coefficient array in FFT ordering.  JSON mirrors the same content for
small cases.
"""

import json
import struct

import numpy as np

from .field import SpaceTimeField, SpectralField
from .grid import GridSpec

_HEADER = struct.Struct("<qddqq")


def _write_header(fh, grid):
    fh.write(_HEADER.pack(grid.dim, grid.R, grid.L, grid.nx, grid.nt))


def _read_header(fh):
    dim, R, L, nx, nt = _HEADER.unpack(fh.read(_HEADER.size))
    return GridSpec(dim=dim, R=R, L=L, nx=nx, nt=nt)


def _write_complex(fh, arr):
    inter = np.empty(arr.size * 2, dtype="<f8")
    flat = np.ascontiguousarray(arr).reshape(-1)
    inter[0::2] = flat.real
    inter[1::2] = flat.imag
    fh.write(inter.tobytes())


def _read_complex(fh, shape):
    count = int(np.prod(shape)) * 2
    inter = np.frombuffer(fh.read(count * 8), dtype="<f8")
    return (inter[0::2] + 1j * inter[1::2]).reshape(shape)


def save_spacetime(path, u: SpaceTimeField):
    if len(u.times) != u.grid.nt:
        raise ValueError("binary container stores full-time-grid fields only")
    with open(path, "wb") as fh:
        _write_header(fh, u.grid)
        _write_complex(fh, u.values)


def load_spacetime(path) -> SpaceTimeField:
    with open(path, "rb") as fh:
        grid = _read_header(fh)
        values = _read_complex(fh, grid.space_shape + (grid.nt,))
    return SpaceTimeField(grid, values)


def save_spectral(path, f: SpectralField):
    center, radius = f.support_ball
    with open(path, "wb") as fh:
        _write_header(fh, f.grid)
        fh.write(np.array(list(center) + [radius], dtype="<f8").tobytes())
        _write_complex(fh, f.coeffs)


def load_spectral(path) -> SpectralField:
    with open(path, "rb") as fh:
        grid = _read_header(fh)
        ball = np.frombuffer(fh.read((grid.dim + 1) * 8), dtype="<f8")
        coeffs = _read_complex(fh, grid.space_shape)
    return SpectralField(grid, coeffs, support_ball=(tuple(ball[:-1]), float(ball[-1])))


def spectral_to_json(f: SpectralField) -> str:
    center, radius = f.support_ball
    return json.dumps(
        {
            "dim": f.grid.dim,
            "R": f.grid.R,
            "L": f.grid.L,
            "nx": f.grid.nx,
            "nt": f.grid.nt,
            "support_center": list(center),
            "support_radius": radius,
            "re": f.coeffs.real.reshape(-1).tolist(),
            "im": f.coeffs.imag.reshape(-1).tolist(),
        }
    )


def spectral_from_json(text: str) -> SpectralField:
    d = json.loads(text)
    grid = GridSpec(dim=d["dim"], R=d["R"], L=d["L"], nx=d["nx"], nt=d["nt"])
    coeffs = (np.array(d["re"]) + 1j * np.array(d["im"])).reshape(grid.space_shape)
    return SpectralField(
        grid, coeffs, support_ball=(tuple(d["support_center"]), d["support_radius"])
    )
