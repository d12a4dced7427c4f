import numpy as np
import pytest

from schrodlab.errors import NoNonSingularPoints
from schrodlab.fieldcore import make_grid
from schrodlab.partition import (
    PartitionPolynomial,
    Poly,
    classify_tangency,
    graded_monomials,
    is_E_tangent,
)
from schrodlab.wavepacket import WavePacketFrame, tube_of


@pytest.fixture(scope="module")
def setting():
    grid = make_grid(2, 32)
    frame = WavePacketFrame(grid)
    mono = graded_monomials(3, 1)
    # Z(P): the plane t = x1 (scaled: tau - u1 = 0)
    plane = PartitionPolynomial(
        [Poly(mono[[1, 3]], np.array([-1.0, 1.0]))], 1, 2, grid.R
    )
    return grid, frame, plane


def in_plane_tile(frame):
    nus = frame.nu_centers_axis()
    j0 = int(np.argmin(np.abs(nus)))
    key = int(round(-0.5 / frame.theta_spacing))
    return frame.tile((key, 0), (j0, j0))


def test_tube_inside_plane_is_tangent(setting):
    grid, frame, plane = setting
    tube = tube_of(in_plane_tile(frame), 0.05)
    ball = ((0.0, 0.0, grid.R / 2), 2 * grid.R ** (1 - 0.05))
    lab = classify_tangency(tube, plane, ball[0], ball[1], 0.05, grid)
    assert lab.label == "tangent"
    assert lab.worst_angle <= lab.angle_threshold


def test_steep_tube_is_transverse(setting):
    grid, frame, plane = setting
    nus = frame.nu_centers_axis()
    jm = int(np.argmin(np.abs(nus - grid.R / 2)))
    j0 = int(np.argmin(np.abs(nus)))
    tube = tube_of(frame.tile((0, 0), (jm, j0)), 0.05)  # vertical, crosses t=x1
    lab = classify_tangency(
        tube, plane, (0.0, 0.0, grid.R / 2), 2 * grid.R ** (1 - 0.05), 0.05, grid
    )
    assert lab.label == "transverse"
    assert lab.worst_angle == pytest.approx(np.pi / 4, abs=0.02)


def test_far_tube_is_disjoint(setting):
    grid, frame, plane = setting
    nus = frame.nu_centers_axis()
    jfar = int(np.argmin(np.abs(nus + grid.L / 2 * 0.9)))
    j0 = int(np.argmin(np.abs(nus)))
    tube = tube_of(frame.tile((0, 0), (jfar, j0)), 0.05)
    lab = classify_tangency(
        tube, plane, (0.0, 0.0, grid.R / 2), grid.R ** (1 - 0.05) / 2, 0.05, grid
    )
    assert lab.label == "disjoint"
    assert np.isnan(lab.worst_angle)


def test_threshold_monotonicity(setting):
    # shrinking the angle threshold never converts transverse -> tangent
    grid, frame, plane = setting
    tube = tube_of(in_plane_tile(frame), 0.05)
    ball = ((0.0, 0.0, grid.R / 2), 2 * grid.R ** (1 - 0.05))
    labels = []
    for delta in (0.02, 0.05, 0.1):
        lab = classify_tangency(tube, plane, ball[0], ball[1], delta, grid)
        labels.append((lab.angle_threshold, lab.label))
    labels.sort()
    seen_tangent = False
    for _, label in labels:
        if label == "tangent":
            seen_tangent = True
        elif seen_tangent:
            pytest.fail("tangent flipped back to transverse at larger threshold")


def test_singular_point_detection(setting):
    grid, frame, plane = setting
    mono = graded_monomials(3, 2)
    expo = [tuple(e) for e in mono.tolist()]
    coeffs = np.zeros(len(mono))
    coeffs[expo.index((2, 0, 0))] = 1.0  # P = u1^2: gradient vanishes on Z
    P = PartitionPolynomial([Poly(mono, coeffs)], 2, 2, grid.R)
    tube = tube_of(in_plane_tile(frame), 0.05)
    with pytest.raises(NoNonSingularPoints):
        classify_tangency(
            tube, P, (0.0, 0.0, grid.R / 2), 2 * grid.R ** (1 - 0.05), 0.05, grid
        )


def test_E_tangency_construction(setting):
    # tubes passing the E R^(-1/2)-tangency filter all classify tangent
    # once the classification threshold R^(-1/2+2delta) >= E R^(-1/2)
    grid, frame, plane = setting
    E = 4.0
    delta = 0.2  # 32^(2*0.2) = 4 = E, so the thresholds match exactly
    assert grid.R ** (2 * delta) >= E

    nus = frame.nu_centers_axis()
    key0 = int(round(-0.5 / frame.theta_spacing))
    candidates = []
    for dk in (-3, 0, 3, 12):
        for j in range(0, frame.n_nu, 4):
            candidates.append(tube_of(frame.tile((key0 + dk, 0), (j, j)), delta))
    members = [t for t in candidates if is_E_tangent(t, plane, E, grid)]
    assert len(members) >= 2
    ball = ((0.0, 0.0, grid.R / 2), 2 * grid.R ** (1 - delta))
    for tube in members:
        lab = classify_tangency(tube, plane, ball[0], ball[1], delta, grid)
        assert lab.label in ("tangent", "disjoint")

    # a vertical tube crossing the plane fails the angle filter
    jm = int(np.argmin(np.abs(nus - grid.R / 2)))
    vert = tube_of(frame.tile((0, 0), (jm, jm)), delta)
    assert not is_E_tangent(vert, plane, E, grid)


def test_transverse_ball_count_reported(setting):
    # statement check for the transversal-crossing lemma: a tube is
    # transverse in at most poly(D) of the R^(1-delta)-balls
    grid, frame, plane = setting
    delta = 0.05
    rad = grid.R ** (1 - delta)
    tube = tube_of(in_plane_tile(frame), delta)
    centers = []
    step = rad
    for cx in np.arange(-grid.R, grid.R + 1, step):
        for ct in np.arange(0, grid.R + 1, step):
            centers.append((cx, 0.0, ct))
    n_trans = 0
    for c in centers:
        lab = classify_tangency(tube, plane, c, rad, delta, grid)
        if lab.label == "transverse":
            n_trans += 1
    bound = (plane.degree + 1) ** 3
    print(f"transverse in {n_trans} balls (poly bound {bound})")
    assert n_trans <= bound
