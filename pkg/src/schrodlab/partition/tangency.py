"""Tangent/transverse classification of tubes against the variety."""

from dataclasses import dataclass

import numpy as np

from ..errors import NoNonSingularPoints
from .wall import zero_point_cloud

GRADIENT_FLOOR = 1e-8


@dataclass
class TangencyLabel:
    label: str                # "tangent" | "transverse" | "disjoint"
    ball_center: tuple
    ball_radius: float
    angle_threshold: float
    worst_angle: float        # max sampled angle (nan when disjoint)
    n_zero_points: int


def _angles_to_tangent_planes(direction, grads):
    """Angle between a direction and the plane normal to each gradient."""
    d = direction / np.linalg.norm(direction)
    n = grads / np.linalg.norm(grads, axis=-1, keepdims=True)
    dots = np.abs(n @ d)
    return np.arcsin(np.clip(dots, 0.0, 1.0))


def _dist_to_tube_axis(tube, pts):
    x = pts[..., :-1]
    t = pts[..., -1]
    axis = tube.axis_point(t)
    return np.linalg.norm(x - axis, axis=-1), t


def classify_tangency(tube, P, ball_center, ball_radius, delta, grid,
                      wall_width=None) -> TangencyLabel:
    """Label per the angle criterion at radius R^(-1/2+2delta).

    disjoint: the tube misses wall cap ball; tangent: every sampled
    non-singular zero point of P in 10T cap 2B has
    Angle(G0, T_z Z) <= R^(-1/2+2delta); transverse otherwise.
    """
    R = tube.tile.R
    if wall_width is None:
        wall_width = R ** (0.5 + delta)
    threshold = R ** (-0.5 + 2 * delta)
    center = np.asarray(ball_center, dtype=float)

    # zero cloud inside 2B (axis-aligned bounding box of the ball)
    lo = center - 2 * ball_radius
    hi = center + 2 * ball_radius
    lo[-1] = max(lo[-1], 0.0)
    hi[-1] = min(hi[-1], grid.R)
    res = min(max(grid.dx, grid.dt), wall_width / 8.0)
    cloud = zero_point_cloud(P, grid, resolution=res, bounds=(lo, hi))
    if len(cloud):
        keep = np.linalg.norm(cloud - center[None, :], axis=1) <= 2 * ball_radius
        cloud = cloud[keep]

    # does the tube meet the wall inside the ball?
    touching = False
    if len(cloud):
        in_ball_cloud = cloud[
            np.linalg.norm(cloud - center[None, :], axis=1) <= ball_radius + wall_width
        ]
        if len(in_ball_cloud):
            dist, t = _dist_to_tube_axis(tube, in_ball_cloud)
            touching = bool(
                np.any((dist <= tube.radius + wall_width) & (t >= 0) & (t <= R))
            )
    if not touching:
        return TangencyLabel(
            label="disjoint",
            ball_center=tuple(center),
            ball_radius=ball_radius,
            angle_threshold=threshold,
            worst_angle=float("nan"),
            n_zero_points=0,
        )

    dist, _ = _dist_to_tube_axis(tube, cloud)
    local = cloud[dist <= 10 * tube.radius]
    if len(local) == 0:
        local = cloud
    grads = P.gradient(local)
    gnorm = np.linalg.norm(grads, axis=-1)
    ok = gnorm > GRADIENT_FLOOR
    if not ok.any():
        raise NoNonSingularPoints(
            "gradient vanished at every sampled zero point near the tube"
        )
    angles = _angles_to_tangent_planes(tube.tile.direction(), grads[ok])
    worst = float(np.max(angles))
    return TangencyLabel(
        label="tangent" if worst <= threshold else "transverse",
        ball_center=tuple(center),
        ball_radius=ball_radius,
        angle_threshold=threshold,
        worst_angle=worst,
        n_zero_points=int(ok.sum()),
    )


def is_E_tangent(tube, P, E, grid):
    """Tube lies in the E R^(1/2)-neighborhood of Z with angles <= E R^(-1/2)."""
    R = tube.tile.R
    reach = E * np.sqrt(R)
    cloud = zero_point_cloud(P, grid, resolution=max(grid.dx, grid.dt))
    if len(cloud) == 0:
        return False
    from scipy.spatial import cKDTree

    tree = cKDTree(cloud)
    ts = np.linspace(0.0, R, 64)
    axis = tube.axis_point(ts)
    pts = np.concatenate([axis, ts[:, None]], axis=1)
    dist, _ = tree.query(pts, k=1)
    if np.max(dist) + tube.radius > reach:
        return False
    ddist, _ = _dist_to_tube_axis(tube, cloud)
    near = cloud[ddist <= 2 * reach + tube.radius]
    if len(near) == 0:
        return True
    grads = P.gradient(near)
    gnorm = np.linalg.norm(grads, axis=-1)
    ok = gnorm > GRADIENT_FLOOR
    if not ok.any():
        raise NoNonSingularPoints("no non-singular zero points near the tube")
    angles = _angles_to_tangent_planes(tube.tile.direction(), grads[ok])
    return bool(np.max(angles) <= E / np.sqrt(R))
