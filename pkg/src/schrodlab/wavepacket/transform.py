"""Analysis and synthesis against the tile frame.

Coefficients <f, phi_(theta,nu)> are evaluated per theta on the small
frequency window carrying phihat_theta, via separable phase matrices over
the nu-lattice; this is exact (no FFT approximation) and cheap because the
window is a few lattice points per axis.
"""

import json
from dataclasses import dataclass, field

import numpy as np

from ..fieldcore.field import SpectralField
from .frame import Tile, WavePacketFrame


@dataclass
class CoefficientSet:
    """Wave-packet coefficients, stored per theta as nu-lattice arrays."""

    frame: WavePacketFrame
    data: dict = field(default_factory=dict)  # theta_key -> complex array
    dropped_mass_sq: float = 0.0
    source_norm: float = 0.0

    def total_mass_sq(self):
        return float(sum(np.sum(np.abs(v) ** 2) for v in self.data.values()))

    def frame_ratio(self):
        """sum |coeff|^2 / ||f||_2^2 against the decomposed field."""
        return self.total_mass_sq() / self.source_norm**2

    def n_entries(self):
        return int(sum(np.count_nonzero(v) for v in self.data.values()))

    def tiles(self):
        for key, arr in self.data.items():
            nz = np.argwhere(arr != 0)
            for idx in nz:
                yield self.frame.tile(key, tuple(idx)), arr[tuple(idx)]

    def subset(self, keep):
        """New set keeping entries where keep(tile) is true."""
        out = CoefficientSet(self.frame, {}, 0.0, self.source_norm)
        for key, arr in self.data.items():
            new = np.zeros_like(arr)
            nz = np.argwhere(arr != 0)
            for idx in nz:
                t = self.frame.tile(key, tuple(idx))
                if keep(t):
                    new[tuple(idx)] = arr[tuple(idx)]
            if np.any(new):
                out.data[key] = new
        return out

    def __add__(self, other):
        if other.frame is not self.frame:
            raise ValueError("coefficient sets built on different frames")
        out = CoefficientSet(self.frame, {}, 0.0, self.source_norm)
        keys = set(self.data) | set(other.data)
        for k in keys:
            a = self.data.get(k)
            b = other.data.get(k)
            out.data[k] = (a if a is not None else 0) + (b if b is not None else 0)
        return out

    def to_jsonl(self, fh):
        for tile, c in self.tiles():
            fh.write(
                json.dumps(
                    {
                        "theta_center": list(tile.theta_center),
                        "nu_center": list(tile.nu_center),
                        "R": tile.R,
                        "re": c.real,
                        "im": c.imag,
                    }
                )
                + "\n"
            )


def coefficients_from_jsonl(frame: WavePacketFrame, fh) -> CoefficientSet:
    out = CoefficientSet(frame, {})
    nus = frame.nu_centers_axis()
    dim = frame.grid.dim
    shape = (frame.n_nu,) * dim
    for line in fh:
        if not line.strip():
            continue
        rec = json.loads(line)
        tkey = tuple(
            int(round(c / frame.theta_spacing)) for c in rec["theta_center"]
        )
        nkey = tuple(int(round((c - nus[0]) / frame.nu_side)) for c in rec["nu_center"])
        if tkey not in out.data:
            out.data[tkey] = np.zeros(shape, dtype=complex)
        out.data[tkey][nkey] = rec["re"] + 1j * rec["im"]
    return out


def _shifted_spectrum(f: SpectralField):
    kshift = np.fft.fftshift(f.grid.freqs())
    fsh = np.fft.fftshift(f.coeffs)
    return kshift, fsh


def decompose(f: SpectralField, frame: WavePacketFrame, drop_tol=1e-14) -> CoefficientSet:
    """All coefficients <f, phi_(theta,nu)> for theta meeting supp fhat.

    Entries below drop_tol * ||f||_2 are dropped; the dropped l2 mass is
    reported on the returned set, never silently discarded.
    """
    frame.require_grid(f)
    grid = frame.grid
    dim = grid.dim
    kshift, fsh = _shifted_spectrum(f)
    nus = frame.nu_centers_axis()
    center, radius = f.support_ball
    axis_keys = [frame.theta_keys_covering(center[a], radius) for a in range(dim)]

    # per-axis cache of (window slice, profile values, phase matrix)
    cache = []
    for a in range(dim):
        entries = {}
        for key in axis_keys[a]:
            c = frame.theta_spacing * key
            lo, hi = frame.axis_window(kshift, c)
            if hi <= lo:
                continue
            kw = kshift[lo:hi]
            prof = frame.axis_profile(kw, c)
            phase = np.exp(1j * np.outer(nus, kw))
            entries[int(key)] = (lo, hi, prof, phase)
        cache.append(entries)

    out = CoefficientSet(frame, {}, 0.0, f.norm_l2())
    scale = grid.L ** (-dim)
    threshold = drop_tol * out.source_norm
    dropped = 0.0

    if dim == 1:
        for k1, (lo, hi, prof, phase) in cache[0].items():
            w = fsh[lo:hi] * prof
            if not np.any(w):
                continue
            c = scale * (phase @ w)
            small = np.abs(c) < threshold
            dropped += float(np.sum(np.abs(c[small]) ** 2))
            c[small] = 0.0
            if np.any(c):
                out.data[(k1,)] = c
    else:
        for k1, (lo1, hi1, prof1, ph1) in cache[0].items():
            block = fsh[lo1:hi1, :]
            for k2, (lo2, hi2, prof2, ph2) in cache[1].items():
                w = block[:, lo2:hi2] * np.outer(prof1, prof2)
                if not np.any(w):
                    continue
                c = scale * (ph1 @ w @ ph2.T)
                small = np.abs(c) < threshold
                dropped += float(np.sum(np.abs(c[small]) ** 2))
                c[small] = 0.0
                if np.any(c):
                    out.data[(k1, k2)] = c
    out.dropped_mass_sq = dropped
    return out


def reconstruct(cset: CoefficientSet, c_kappa=None) -> SpectralField:
    """Synthesis c_kappa * sum coeff * phi_(theta,nu), back to spectral data."""
    frame = cset.frame
    grid = frame.grid
    dim = grid.dim
    if c_kappa is None:
        c_kappa = frame.c_kappa
    kshift = np.fft.fftshift(grid.freqs())
    acc = np.zeros(grid.space_shape, dtype=complex)
    nus = frame.nu_centers_axis()

    max_reach = 0.0
    for key, c in cset.data.items():
        centers = [frame.theta_spacing * k for k in key]
        max_reach = max(
            max_reach,
            max(abs(cc) for cc in centers) + frame.kappa * frame.theta_side,
        )
        if dim == 1:
            lo, hi = frame.axis_window(kshift, centers[0])
            prof = frame.axis_profile(kshift[lo:hi], centers[0])
            phase = np.exp(-1j * np.outer(kshift[lo:hi], nus))
            acc[lo:hi] += prof * (phase @ c)
        else:
            lo1, hi1 = frame.axis_window(kshift, centers[0])
            lo2, hi2 = frame.axis_window(kshift, centers[1])
            prof1 = frame.axis_profile(kshift[lo1:hi1], centers[0])
            prof2 = frame.axis_profile(kshift[lo2:hi2], centers[1])
            ph1 = np.exp(-1j * np.outer(kshift[lo1:hi1], nus))
            ph2 = np.exp(-1j * np.outer(kshift[lo2:hi2], nus))
            acc[lo1:hi1, lo2:hi2] += np.outer(prof1, prof2) * (ph1 @ c @ ph2.T)

    coeffs = np.fft.ifftshift(c_kappa * acc)
    radius = max(max_reach, 1.0)
    return SpectralField(grid, coeffs, support_ball=((0.0,) * dim, radius))


def packet_field(frame: WavePacketFrame, tile: Tile) -> SpectralField:
    """phi_(theta,nu) itself as spectral initial data."""
    grid = frame.grid
    k = grid.freqs()
    dim = grid.dim
    if dim == 1:
        prof = frame.axis_profile(k, tile.theta_center[0])
        coeffs = prof * np.exp(-1j * tile.nu_center[0] * k)
    else:
        p1 = frame.axis_profile(k, tile.theta_center[0])
        p2 = frame.axis_profile(k, tile.theta_center[1])
        coeffs = np.outer(
            p1 * np.exp(-1j * tile.nu_center[0] * k),
            p2 * np.exp(-1j * tile.nu_center[1] * k),
        )
    return SpectralField(
        grid,
        coeffs,
        support_ball=(tile.theta_center, frame.kappa * frame.theta_side * np.sqrt(dim)),
    )


def measure_frame_bounds(frame: WavePacketFrame, n_draws=50, seed=0, radius=0.8):
    """Monte-Carlo frame-bound measurement: range of sum|coeff|^2 / ||f||^2."""
    from ..fieldcore.field import random_bandlimited

    rng = np.random.default_rng(seed)
    ratios = []
    for _ in range(n_draws):
        f = random_bandlimited(frame.grid, rng, radius=radius)
        cs = decompose(f, frame)
        ratios.append(cs.frame_ratio())
    return float(np.min(ratios)), float(np.max(ratios))
