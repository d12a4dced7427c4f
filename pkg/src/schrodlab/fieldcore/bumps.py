"""Smooth cutoff primitives shared by the frequency partitions.

smooth_step is the classic C-infinity ramp built from exp(-1/u); it
satisfies step(u) + step(1-u) = 1 exactly, which is what makes the
telescoping partitions below sum to one with no calibration.
"""

import numpy as np


def _bump_half(u):
    out = np.zeros_like(u, dtype=float)
    pos = u > 0
    out[pos] = np.exp(-1.0 / u[pos])
    return out


def smooth_step(u):
    """C-inf monotone ramp: 0 for u <= 0, 1 for u >= 1, step(u)+step(1-u)=1."""
    u = np.asarray(u, dtype=float)
    a = _bump_half(u)
    b = _bump_half(1.0 - u)
    with np.errstate(invalid="ignore"):
        out = np.where(a + b > 0, a / (a + b), 0.0)
    return out


def plateau(s, inner, outer):
    """Smooth even plateau: 1 on [-inner, inner], 0 outside [-outer, outer]."""
    s = np.abs(np.asarray(s, dtype=float))
    return smooth_step((outer - s) / (outer - inner))
