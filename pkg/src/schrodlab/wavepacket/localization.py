"""Physical and frequency localization measurements for wave packets.

These report measured quantities.  The asymptotic theory promises rapid
decay outside the tube once R^delta dominates the fixed profile constant
1/kappa; at desk scales that regime is far away, so callers should treat
the outputs as diagnostics, not as bounds to assert blindly (the tests pin
measured values).
"""

from dataclasses import dataclass

import numpy as np
import scipy.fft as sfft

from ..fieldcore.bumps import plateau
from ..fieldcore.norms import full_box_mask
from ..fieldcore.propagator import propagate
from .frame import Tile, WavePacketFrame, tube_of
from .transform import packet_field


@dataclass
class TubeLocalizationReport:
    fraction_in_tube: float
    fraction_in_2tube: float
    max_exterior: float          # max |psi| outside T, inside the box
    max_exterior_2t: float       # max |psi| outside 2T, inside the box
    peak: float                  # global max |psi| over the box


def tube_mass_fraction(tile: Tile, frame: WavePacketFrame, delta: float) -> TubeLocalizationReport:
    """Share of the box L2 mass of psi_(theta,nu) inside its tube."""
    grid = frame.grid
    tube = tube_of(tile, delta)
    u = propagate(packet_field(frame, tile))
    dens = np.abs(u.values) ** 2

    box = full_box_mask(grid)
    t = grid.times()
    x = grid.x_coords()
    if grid.dim == 1:
        axis = tube.axis_point(t)[:, 0]  # (nt,)
        dist = np.abs(x[:, None] - axis[None, :])
    else:
        axis = tube.axis_point(t)  # (nt, 2)
        dx0 = x[:, None, None] - axis[None, None, :, 0]
        dx1 = x[None, :, None] - axis[None, None, :, 1]
        dist = np.sqrt(dx0**2 + dx1**2)

    in_tube = (dist <= tube.radius) & box
    in_2tube = (dist <= 2 * tube.radius) & box
    total = float(np.sum(dens[box]))
    absu = np.sqrt(dens)
    return TubeLocalizationReport(
        fraction_in_tube=float(np.sum(dens[in_tube]) / total),
        fraction_in_2tube=float(np.sum(dens[in_2tube]) / total),
        max_exterior=float(np.max(np.where(box & ~in_tube, absu, 0.0))),
        max_exterior_2t=float(np.max(np.where(box & ~in_2tube, absu, 0.0))),
        peak=float(np.max(np.where(box, absu, 0.0))),
    )


def _time_cutoff(grid, ntimes):
    """Smooth cutoff identically 1 on [0,R] with ramps of length ~2R,
    compactly supported inside the sampling window [-2R, 3R) so the
    discrete transform sees no seam.  The long ramps keep the cutoff's
    spectrum essentially inside the 1/R cap width."""
    tgrid = -2.0 * grid.R + 5.0 * grid.R * (np.arange(ntimes) + 0.5) / ntimes
    window = plateau(tgrid / grid.R - 0.5, 0.5, 2.46)
    return tgrid, window


def frequency_cap_check(tile: Tile, frame: WavePacketFrame, cap_constant=4.0, enlarge=1.0):
    """Fraction of the space-time Fourier mass of psi* inside the cap

        theta* = { (xi, xi3) : xi in enlarge*theta, |xi3 - |xi|^2| <= enlarge*C/R }.

    psi* is the packet multiplied by the smooth time cutoff psi(t/R)
    (identically 1 on [0,R]), transformed over the extended window
    [-2R, 3R) that contains the cutoff's support.
    """
    grid = frame.grid
    ntimes = 5 * grid.nt
    tgrid, window = _time_cutoff(grid, ntimes)
    u = propagate(packet_field(frame, tile), times=tgrid)
    vals = u.values * window  # psi*

    spec = sfft.fftn(vals, axes=(-1,), workers=-1)
    spec = sfft.fftn(spec, axes=tuple(range(grid.dim)), workers=-1)
    power = np.abs(spec) ** 2

    k = grid.freqs()
    tspan = tgrid[-1] - tgrid[0] + (tgrid[1] - tgrid[0])
    k3 = 2 * np.pi * np.fft.fftfreq(ntimes, d=tspan / ntimes)

    half = enlarge * tile.theta_side / 2.0
    capw = enlarge * cap_constant / grid.R
    if grid.dim == 1:
        in_theta = np.abs(k - tile.theta_center[0]) <= half
        ksq = k**2
        sel = in_theta[:, None] & (np.abs(k3[None, :] - ksq[:, None]) <= capw)
    else:
        in1 = np.abs(k - tile.theta_center[0]) <= half
        in2 = np.abs(k - tile.theta_center[1]) <= half
        ksq = k[:, None] ** 2 + k[None, :] ** 2
        sel = (in1[:, None, None] & in2[None, :, None]) & (
            np.abs(k3[None, None, :] - ksq[:, :, None]) <= capw
        )
    return float(np.sum(power[sel]) / np.sum(power))


def coverage_budget(cset, delta: float):
    """Diagonal tube-mass account: c_kappa^2 sum |c_T|^2 m_T(box) versus the
    true box mass of the synthesized solution.  Near 1 when the packets are
    nearly orthogonal over the box."""
    from .transform import reconstruct

    frame = cset.frame
    grid = frame.grid
    ck = frame.c_kappa
    u = propagate(reconstruct(cset))
    box = full_box_mask(grid)
    total = float(np.sum(np.abs(u.values[box]) ** 2)) * grid.cell_volume() * grid.dt

    diag = 0.0
    for tile, c in cset.tiles():
        rep = tube_mass_fraction(tile, frame, delta)
        w = propagate(packet_field(frame, tile))
        m_box = float(np.sum(np.abs(w.values[box]) ** 2)) * grid.cell_volume() * grid.dt
        diag += abs(c) ** 2 * m_box * ck**2
    return diag / total
