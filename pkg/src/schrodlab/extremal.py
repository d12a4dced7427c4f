"""The two extremal constructions driving the scaling experiments.

Packet spread: sigma chirped Gaussian packets whose cube columns tile
disjointly; realizes the sigma^(-1/3) L6 law.  The packets are focused at
t = R/2, which minimizes their worst-case width over the time interval
(dispersion balancing), and carry deterministic Gauss-sum phases so that
neighbor interference stays incoherent at large sigma.

Sparse focusing: the lattice-progression (Weyl sum) data whose solution
refocuses on a sparse set of unit squares.  The progression is symmetric
and fills B(0,1) (K ~ 4 R^(1/6) points at spacing ~2/K), which keeps each
revival cell a few unit squares and the detected set X spread at the
R^(1/2)-ball scale.  Validation is through the measured signatures:
|X| ~ R^(3/2), per-ball sparsity, and the height law H ~ R^(-5/12)||g||.
"""

from dataclasses import dataclass
from math import ceil, log2, pi

import numpy as np
from scipy.signal import fftconvolve

from .errors import ConstructionDegenerate, TooManyPackets
from .fieldcore.field import SpectralField
from .fieldcore.grid import GridSpec, make_grid
from .fieldcore.propagator import propagate
from .strichartz.cubes import CubeUnion
from .wavepacket.frame import Tile

PACKET_WIDTH_MULT = 1.3
FOCUSING_K_MULT = 4.0
FOCUSING_THRESHOLD = 0.55


@dataclass
class PacketSpreadExample:
    sigma: int
    R: float
    g: SpectralField
    Y: CubeUnion
    tiles: list
    xi_centers: np.ndarray
    x_centers: np.ndarray


def build_packet_spread(sigma, R, grid=None, width_mult=PACKET_WIDTH_MULT,
                        cubes_per_packet=2) -> PacketSpreadExample:
    """Sum of sigma packets on disjoint cube columns of [-R,R] x [0,R].

    Capacity: sigma <= sqrt(R) (each packet owns a disjoint pair of
    columns).  Frequency centers are distinct adjacent lattice points, so
    the tubes are nearly vertical; each packet is chirped to focus at
    t = R/2 and carries the phase exp(i pi j^2 / sigma).
    """
    if grid is None:
        grid = make_grid(1, R)
    R = float(grid.R)
    Y = CubeUnion(R=R, dim=1)
    sigma = int(sigma)
    if sigma < 1:
        raise ValueError("sigma must be positive")
    if sigma > Y.n_strips:
        raise TooManyPackets(
            f"sigma={sigma} exceeds the disjoint-column capacity {Y.n_strips}"
        )

    k = grid.freqs()
    s_freq = width_mult / np.sqrt(R)
    spacing = 2 * R / sigma
    x0 = -R + (np.arange(sigma) + 0.5) * spacing
    dxi = 2 * pi / grid.L
    xis = (np.arange(sigma) - sigma // 2) * dxi

    coeffs = np.zeros(grid.nx, dtype=complex)
    for j in range(sigma):
        phase = np.exp(1j * pi * j * j / sigma)
        packet = np.exp(
            -((k - xis[j]) ** 2) / (2 * s_freq**2)
            - 1j * x0[j] * k
            - 1j * (R / 2) * (k - xis[j]) ** 2
        )
        coeffs += phase * packet
    coeffs = np.where(np.abs(k) <= 1.0, coeffs, 0.0)
    g = SpectralField(grid, coeffs, support_ball=((0.0,), 1.0))
    g.coeffs /= g.norm_l2()

    side = Y.side
    tiles = []
    for j in range(sigma):
        for it in range(Y.n_strips):
            t_mid = (it + 0.5) * side
            xk = x0[j] - 2 * t_mid * xis[j]
            jx = (xk + R) / side
            if cubes_per_packet == 2:
                cols = (int(round(jx)) - 1, int(round(jx)))
            else:
                cols = (int(np.floor(jx)),)
            for ix in cols:
                if 0 <= ix < Y.n_cols:
                    Y.add((ix, it))
        tiles.append(
            Tile(
                theta_center=(float(xis[j]),),
                nu_center=(float(x0[j]),),
                theta_side=R**-0.5,
                nu_side=R**0.5,
                R=R,
            )
        )
    return PacketSpreadExample(
        sigma=sigma, R=R, g=g, Y=Y, tiles=tiles, xi_centers=xis, x_centers=x0
    )


def tubes_pairwise_disjoint_on_grid(example: PacketSpreadExample, delta=0.05):
    """Exact grid check that the packet tubes do not share samples.

    Only meaningful in the spaced regime sigma <= sqrt(R)/4 where the
    geometric tubes (radius R^(1/2+delta)) fit without contact."""
    from .wavepacket.frame import tube_of

    grid = example.g.grid
    x = grid.x_coords()
    t = grid.times()[:: max(1, grid.nt // 64)]
    masks = []
    for tile in example.tiles:
        tube = tube_of(tile, delta)
        axis = tube.axis_point(t)[:, 0]
        masks.append(np.abs(x[:, None] - axis[None, :]) <= tube.radius)
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if np.any(masks[i] & masks[j]):
                return False
    return True


@dataclass
class SparseFocusingExample:
    R: float
    g: SpectralField
    K: int
    H: float                  # grid max of |u| over the detection window
    height_ratio: float       # H / ||g||_2
    X: np.ndarray             # bool, unit squares of [0,R] x (0,R]
    n_squares: int
    per_ball_density: int     # max unit squares in any R^(1/2)-ball
    threshold: float


def focusing_grid(R):
    """Unit-square-resolving grid: dx <= 1 and dt <= 1."""
    L = 4.0 * R
    nx = 1 << int(ceil(log2(L)))
    return GridSpec(dim=1, R=float(R), L=L, nx=nx, nt=nx)


def build_sparse_focusing(R, k_mult=FOCUSING_K_MULT, threshold=FOCUSING_THRESHOLD,
                          chunk=512) -> SparseFocusingExample:
    """Lattice-progression data focusing on ~R^(3/2) sparse unit squares.

    ghat is the indicator of K = round(k_mult R^(1/6)) equally spaced
    frequency lattice points filling B(0,1) symmetrically.  X collects the
    unit squares of [0,R]^2 where |u| reaches `threshold` times its global
    maximum (threshold is the documented knob; the validated facts are the
    three measured signatures).
    """
    R = float(R)
    if R < 2**8 or 2 ** round(log2(R)) != R:
        raise ValueError("R must be a power of two, at least 2^8")
    grid = focusing_grid(R)
    K = max(3, int(round(k_mult * R ** (1 / 6.0))))
    m1 = max(1, int(round(grid.L / (pi * K))))
    coeffs = np.zeros(grid.nx, dtype=complex)
    coeffs[((np.arange(K) - K // 2) * m1) % grid.nx] = 1.0
    g = SpectralField(grid, coeffs, support_ball=((0.0,), 1.0))

    x = grid.x_coords()
    xsel = np.flatnonzero((x >= 0) & (x < R))
    xbin = np.floor(x[xsel]).astype(int)
    times = grid.times()
    nb = int(R)
    square_max = np.zeros((nb, nb))
    for lo in range(0, grid.nt, chunk):
        tt = times[lo : lo + chunk]
        u = propagate(g, times=tt)
        vals = np.abs(u.values[xsel, :])
        tbin = np.clip(np.ceil(tt).astype(int) - 1, 0, nb - 1)
        for j, b in enumerate(tbin):
            np.maximum.at(square_max[:, b], xbin, vals[:, j])

    H = float(square_max.max())
    X = square_max >= threshold * H
    n_squares = int(X.sum())
    if n_squares < R**1.5 / 16:
        raise ConstructionDegenerate(
            f"|X| = {n_squares} below R^(3/2)/16; retune k_mult/threshold"
        )
    density = max_ball_count(X, R)
    return SparseFocusingExample(
        R=R,
        g=g,
        K=K,
        H=H,
        height_ratio=H / g.norm_l2(),
        X=X,
        n_squares=n_squares,
        per_ball_density=density,
        threshold=threshold,
    )


def max_ball_count(X, R):
    """Max number of X-squares inside any ball of radius R^(1/2)."""
    rad = int(round(np.sqrt(R)))
    yy, xx = np.ogrid[-rad : rad + 1, -rad : rad + 1]
    disc = (xx * xx + yy * yy <= rad * rad).astype(float)
    counts = fftconvolve(X.astype(float), disc, mode="same")
    return int(round(counts.max()))
