"""Named scaling experiments with reproducible CSV/manifest/SVG output.

Every run writes its manifest first and a DONE marker last, so an output
directory without the marker identifies an interrupted run.  CSVs are
byte-stable for a fixed seed.
"""

import json
import subprocess
from pathlib import Path

import numpy as np

from .config import RunConfig
from .errors import UnknownExperiment
from .extremal import build_packet_spread, build_sparse_focusing
from .fieldcore.field import random_bandlimited, SpectralField
from .fieldcore.fitting import fit_exponent
from .fieldcore.grid import make_grid
from .fieldcore.propagator import propagate
from .partition.cells import polynomial_partition, balance_report
from .partition.hamsandwich import build_layout
from .partition.lines import cells_entered_by_line
from .partition.poly import PartitionPolynomial, Poly, graded_monomials
from .strichartz.cubes import CubeUnion
from .strichartz.decoupling import decoupling_ratio
from .strichartz.refined import bilinear_refined_ratio, cube_l6_profile
from .svgplot import loglog_plot

CSV_HEADER = "R,param,M,E,norm,ratio,fitted_slope"


def _fmt(v):
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return format(float(v), ".12g")


def run_sigma_law(cfg: RunConfig):
    R = float(cfg.R_list[0])
    grid = make_grid(1, R)
    rows = []
    pts = []
    for sigma in cfg.sigma_list:
        ex = build_packet_spread(sigma, R, grid=grid)
        u = propagate(ex.g)
        norm6 = sum(cube_l6_profile(u.values, grid, ex.Y).values()) ** (1 / 6.0)
        pts.append((sigma, norm6))
        rows.append(
            dict(R=R, param=sigma, M=1.0, E=0.0, norm=norm6,
                 ratio=norm6 * sigma ** (1 / 3.0))
        )
    fit = fit_exponent(pts)
    return rows, pts, fit


def run_focusing_law(cfg: RunConfig):
    rows = []
    pts = []
    for R in cfg.R_list:
        ex = build_sparse_focusing(float(R))
        pts.append((float(R), ex.height_ratio))
        rows.append(
            dict(R=float(R), param=ex.K, M=ex.n_squares,
                 E=ex.per_ball_density, norm=ex.height_ratio,
                 ratio=ex.n_squares / float(R) ** 1.5)
        )
    fit = fit_exponent(pts)
    return rows, pts, fit


def run_decoupling_growth(cfg: RunConfig):
    rng = np.random.default_rng(cfg.seed)
    rows = []
    pts = []
    for R in cfg.R_list:
        grid = make_grid(1, float(R))
        Y = CubeUnion(R=float(R), dim=1)
        cube = ((-Y.side / 2,), (Y.n_strips // 2) * Y.side, Y.side)
        ratios = []
        for _ in range(cfg.trials):
            k = grid.freqs()
            coeffs = np.where(
                np.abs(k) <= 1.0, np.exp(2j * np.pi * rng.random(grid.nx)), 0.0
            )
            f = SpectralField(grid, coeffs, ((0.0,), 1.0))
            ratios.append(decoupling_ratio(f, cube))
        mean = float(np.mean(ratios))
        pts.append((float(R), mean))
        rows.append(
            dict(R=float(R), param=cfg.trials, M=1.0, E=0.0, norm=mean,
                 ratio=float(np.max(ratios)))
        )
    fit = fit_exponent(pts)
    return rows, pts, fit


def _separated_packet_pair(grid, n_packets, rng):
    """Two packet families with frequency supports near -1/2 and +1/2."""
    R = grid.R
    k = grid.freqs()
    s_freq = 1.3 / np.sqrt(R)
    fields = []
    for center, sign in ((-0.55, 1), (0.55, -1)):
        coeffs = np.zeros(grid.nx, dtype=complex)
        for j in range(n_packets):
            xi = center + (j - n_packets // 2) * 4 * np.pi / grid.L
            x0 = -R / 2 + (j + 0.5) * R / n_packets + sign * R / 7
            coeffs += np.exp(
                1j * np.pi * j * j / n_packets
                - ((k - xi) ** 2) / (2 * s_freq**2)
                - 1j * x0 * k
                - 1j * (R / 2) * (k - xi) ** 2
            )
        coeffs = np.where(np.abs(k - center) <= 0.25, coeffs, 0.0)
        f = SpectralField(grid, coeffs, support_ball=((center,), 0.25))
        f.coeffs /= f.norm_l2()
        fields.append(f)
    return fields


def run_bilinear_law(cfg: RunConfig):
    rng = np.random.default_rng(cfg.seed)
    rows = []
    pts = []
    for R in cfg.R_list:
        grid = make_grid(1, float(R))
        f1, f2 = _separated_packet_pair(grid, max(2, cfg.N), rng)
        u1 = propagate(f1)
        u2 = propagate(f2)
        prod = np.sqrt(np.abs(u1.values) * np.abs(u2.values))
        Yall = CubeUnion(R=float(R), dim=1)
        masses = cube_l6_profile(
            prod, grid, _all_cubes(Yall)
        )
        peak = max(masses.values())
        Y = CubeUnion(R=float(R), dim=1)
        for idx, m in masses.items():
            if m >= peak / 4.0**6:  # one dyadic step in norm
                Y.add(idx)
        ratio = bilinear_refined_ratio(
            f1, f2, Y, separation=0.25, u1=u1, u2=u2, check_constancy=False
        )
        pts.append((float(R), ratio))
        rows.append(
            dict(R=float(R), param=len(Y), M=1.0, E=0.0, norm=ratio,
                 ratio=ratio)
        )
    fit = fit_exponent(pts) if len(pts) >= 3 else None
    return rows, pts, fit


def _all_cubes(Y: CubeUnion):
    for ix in range(Y.n_cols):
        for it in range(Y.n_strips):
            Y.add((ix, it))
    return Y


def run_partition_balance(cfg: RunConfig):
    rng = np.random.default_rng(cfg.seed)
    grid = make_grid(1, 64, oversample=2)
    rows = []
    pts = []
    for D in cfg.D_list:
        for kind in ("uniform", "random"):
            W = (
                np.ones((grid.nx, grid.nt))
                if kind == "uniform"
                else rng.random((grid.nx, grid.nt)) + 0.05
            )
            P, cells = polynomial_partition(W, grid, D=int(D), r=2.0,
                                            seed=cfg.seed)
            layout = build_layout([W.reshape(-1, grid.nt)], grid, 2.0, grid.R)
            rep = balance_report(cells, layout.totals[0])
            s = len(P.factors)
            rows.append(
                dict(R=grid.R, param=int(D), M=s, E=0.0,
                     norm=rep["min_share"] * 2.0**s,
                     ratio=rep["worst_ratio"] / 2.0**s)
            )
            pts.append((int(D), rep["min_share"] * 2.0**s))
    fit = fit_exponent(pts) if len({p for p, _ in pts}) >= 3 else None
    return rows, pts, fit


def run_crossing_bound(cfg: RunConfig):
    rng = np.random.default_rng(cfg.seed)
    R = 32.0
    trials_per_D = max(1, cfg.trials)
    rows = []
    pts = []
    for D in (2, 3, 4):
        degrees = {2: [2], 3: [1, 2], 4: [2, 2]}[D]
        worst = 0
        violations = 0
        for _ in range(trials_per_D):
            factors = []
            for d in degrees:
                mono = graded_monomials(3, d)
                c = rng.standard_normal(len(mono))
                factors.append(Poly(mono, c / np.linalg.norm(c)))
            P = PartitionPolynomial(factors, D, 2, R)
            p0 = np.array([rng.uniform(-R, R), rng.uniform(-R, R),
                           rng.uniform(0, R)])
            d = rng.standard_normal(3) * R
            res = cells_entered_by_line(P, p0, d)
            worst = max(worst, res.count)
            if res.count > D + 1:
                violations += 1
        rows.append(
            dict(R=R, param=D, M=trials_per_D, E=0.0, norm=worst,
                 ratio=violations)
        )
        pts.append((D, worst))
    fit = fit_exponent(pts)
    return rows, pts, fit


EXPERIMENTS = {
    "sigma_law": run_sigma_law,
    "focusing_law": run_focusing_law,
    "decoupling_growth": run_decoupling_growth,
    "bilinear_law": run_bilinear_law,
    "partition_balance": run_partition_balance,
    "crossing_bound": run_crossing_bound,
}


def _git_revision():
    try:
        out = subprocess.run(
            ["git", "rev-parse", "HEAD"],
            capture_output=True,
            text=True,
            timeout=5,
        )
        if out.returncode == 0:
            return out.stdout.strip()
    except OSError:
        pass
    return "unknown"


def run_scaling_experiment(name, cfg: RunConfig, out_dir=None):
    """Execute a named experiment; returns (fit, csv_path, manifest_path)."""
    if name not in EXPERIMENTS:
        raise UnknownExperiment(
            f"unknown experiment {name!r}; choose from {sorted(EXPERIMENTS)}"
        )
    out = Path(out_dir if out_dir is not None else cfg.out_dir) / name
    out.mkdir(parents=True, exist_ok=True)

    manifest = {
        "experiment": name,
        "seed": cfg.seed,
        "config": cfg.as_dict(),
        "git_revision": _git_revision(),
        "schema": CSV_HEADER,
    }
    manifest_path = out / "manifest.json"
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True))

    rows, pts, fit = EXPERIMENTS[name](cfg)

    slope = fit.slope if fit is not None else float("nan")
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                _fmt(row[k]) for k in ("R", "param", "M", "E", "norm", "ratio")
            )
            + ","
            + _fmt(slope)
        )
    csv_path = out / f"{name}.csv"
    csv_path.write_text("\n".join(lines) + "\n")

    if fit is not None and len(pts) >= 3:
        svg = loglog_plot(pts, fit, title=name, xlabel="scale", ylabel="value")
        (out / "plot.svg").write_text(svg)

    result = {
        "slope": slope,
        "max_residual": fit.max_residual if fit is not None else float("nan"),
    }
    (out / "result.json").write_text(json.dumps(result, indent=2, sort_keys=True))
    (out / "DONE").write_text("complete\n")
    return fit, csv_path, manifest_path
