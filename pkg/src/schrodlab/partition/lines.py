"""Counting the cells a line visits.

A line enters a new cell only where some factor genuinely changes sign;
isolated roots are bracketed by dense sampling and refined by bisection.
Tangential touches (no sign change) do not change the sign vector and are
correctly ignored, so the reported count never exceeds deg(P) + 1.
"""

from dataclasses import dataclass

import numpy as np


@dataclass
class LineCellCount:
    count: int
    degenerate: bool          # some factor vanished identically on the line
    crossings: list           # refined parameters of genuine sign changes
    sign_vectors: list


def cells_entered_by_line(P, point, direction, t_range=(0.0, 1.0), nsamples=2048,
                          degenerate_tol=1e-12):
    """Distinct sign vectors met along point + s*direction, s in t_range.

    Both point and direction are in raw (x..., t) coordinates.  A factor
    that vanishes identically along the line is flagged and skipped; the
    count then refers to the remaining factors.
    """
    point = np.asarray(point, dtype=float)
    direction = np.asarray(direction, dtype=float)
    s = np.linspace(t_range[0], t_range[1], nsamples)
    pts = point[None, :] + s[:, None] * direction[None, :]

    vals = P.factor_values(pts)  # (nfactors, nsamples)
    live = []
    degenerate = False
    for i, v in enumerate(vals):
        if np.max(np.abs(v)) < degenerate_tol:
            degenerate = True
        else:
            live.append(i)

    crossings = []
    for i in live:
        v = vals[i]
        idx = np.flatnonzero(np.sign(v[:-1]) * np.sign(v[1:]) < 0)
        f = _factor_on_line(P, i, point, direction)
        for j in idx:
            crossings.append(_refine_root(f, s[j], s[j + 1]))
    crossings.sort()

    # sign vector on each open segment between consecutive crossings
    probes = []
    knots = [t_range[0]] + crossings + [t_range[1]]
    for a, b in zip(knots[:-1], knots[1:]):
        if b > a:
            probes.append(0.5 * (a + b))
    probe_pts = point[None, :] + np.array(probes)[:, None] * direction[None, :]
    pv = P.factor_values(probe_pts)
    seen = []
    for m in range(len(probes)):
        sv = tuple(int(np.sign(pv[i, m])) for i in live)
        if sv not in seen:
            seen.append(sv)
    return LineCellCount(
        count=len(seen),
        degenerate=degenerate,
        crossings=crossings,
        sign_vectors=seen,
    )


def _factor_on_line(P, i, point, direction):
    def f(s):
        pts = point + s * direction
        return P.factor_values(pts[None, :])[i, 0]

    return f


def _refine_root(f, a, b, iters=80):
    fa = f(a)
    for _ in range(iters):
        mid = 0.5 * (a + b)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if fa * fm < 0:
            b = mid
        else:
            a, fa = mid, fm
    return 0.5 * (a + b)
