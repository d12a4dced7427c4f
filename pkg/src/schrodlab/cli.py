"""Command-line front end.

Subcommands: run, decompose, partition, propagate, report.
Exit codes: 0 success, 2 unknown experiment or bad usage, 3 empty or
unreadable input file.  Failures emit a machine-readable JSON line on
stderr.
"""

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .config import load_config
from .errors import SchrodLabError, UnknownExperiment


def _fail(code, kind, message):
    sys.stderr.write(json.dumps({"error": kind, "message": message}) + "\n")
    return code


def _overrides_from(args, keys):
    out = {}
    for key in keys:
        val = getattr(args, key, None)
        if val is not None:
            out[key] = val
    return out


def cmd_run(args):
    overrides = _overrides_from(
        args, ["experiment", "R_list", "sigma_list", "D_list", "trials",
               "seed", "out_dir", "threads", "epsilon", "delta"]
    )
    if args.delta is not None:
        overrides["delta_override"] = "true" if args.allow_delta_override else "false"
    try:
        cfg = load_config(args.config, overrides)
    except (ValueError, OSError) as exc:
        return _fail(2, "bad-config", str(exc))
    if args.threads:
        import scipy.fft

        scipy.fft.set_workers(args.threads)
    try:
        fit, csv_path, _ = __import__(
            "schrodlab.experiments", fromlist=["run_scaling_experiment"]
        ).run_scaling_experiment(cfg.experiment, cfg)
    except UnknownExperiment as exc:
        return _fail(2, "unknown-experiment", str(exc))
    except SchrodLabError as exc:
        return _fail(1, type(exc).__name__, str(exc))
    slope = fit.slope if fit is not None else float("nan")
    print(json.dumps({"csv": str(csv_path), "slope": slope}))
    return 0


def _load_spectral_or_fail(path):
    from .fieldcore.io import load_spectral

    p = Path(path)
    if not p.exists() or p.stat().st_size == 0:
        raise OSError(f"input file {path} missing or empty")
    return load_spectral(p)


def cmd_decompose(args):
    from .wavepacket import WavePacketFrame, decompose, reconstruct

    try:
        f = _load_spectral_or_fail(args.input)
    except OSError as exc:
        return _fail(3, "bad-input", str(exc))
    frame = WavePacketFrame(f.grid, kappa=args.kappa)
    cset = decompose(f, frame)
    out = Path(args.out or (args.input + ".coeffs.jsonl"))
    with open(out, "w") as fh:
        cset.to_jsonl(fh)
    f2 = reconstruct(cset)
    err = float(
        np.linalg.norm(f2.coeffs - f.coeffs) / max(np.linalg.norm(f.coeffs), 1e-300)
    )
    print(json.dumps({"coefficients": str(out), "entries": cset.n_entries(),
                      "roundtrip_error": err}))
    return 0


def cmd_partition(args):
    from .fieldcore.io import load_spacetime
    from .partition import polynomial_partition

    p = Path(args.input)
    if not p.exists() or p.stat().st_size == 0:
        return _fail(3, "bad-input", f"input file {args.input} missing or empty")
    u = load_spacetime(p)
    W = np.abs(u.values)
    try:
        P, cells = polynomial_partition(W, u.grid, D=args.degree, r=args.r,
                                        seed=args.seed or 0)
    except SchrodLabError as exc:
        return _fail(1, type(exc).__name__, str(exc))
    out = Path(args.out or (args.input + ".partition.json"))
    doc = json.loads(P.to_json())
    doc["cells"] = [
        {
            "sign_vector": list(c.sign_vector),
            "mass": c.mass,
            "point_mass": c.point_mass,
            "mask_rle": c.mask_rle(),
        }
        for c in cells
    ]
    out.write_text(json.dumps(doc))
    print(json.dumps({"partition": str(out), "cells": len(cells),
                      "degree": P.degree}))
    return 0


def cmd_propagate(args):
    from .fieldcore.io import save_spacetime
    from .fieldcore.propagator import propagate

    try:
        f = _load_spectral_or_fail(args.input)
    except OSError as exc:
        return _fail(3, "bad-input", str(exc))
    u = propagate(f)
    out = Path(args.out or (args.input + ".stf"))
    save_spacetime(out, u)
    print(json.dumps({"field": str(out), "times": len(u.times)}))
    return 0


def cmd_report(args):
    run_dir = Path(args.run_dir)
    manifest = run_dir / "manifest.json"
    if not manifest.exists():
        return _fail(3, "bad-input", f"no manifest in {args.run_dir}")
    doc = json.loads(manifest.read_text())
    done = (run_dir / "DONE").exists()
    result = {}
    if (run_dir / "result.json").exists():
        result = json.loads((run_dir / "result.json").read_text())
    print(
        json.dumps(
            {
                "experiment": doc.get("experiment"),
                "seed": doc.get("seed"),
                "complete": done,
                **result,
            }
        )
    )
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--out", dest="out_dir", default=None)
    common.add_argument("--config", default=None)
    common.add_argument("--threads", type=int, default=None)

    ap = argparse.ArgumentParser(prog="schrodlab", parents=[common])
    sub = ap.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a named scaling experiment",
                           parents=[common])
    p_run.add_argument("experiment")
    p_run.add_argument("--R", dest="R_list", default=None,
                       help="comma-separated scales")
    p_run.add_argument("--sigma", dest="sigma_list", default=None)
    p_run.add_argument("--D", dest="D_list", default=None)
    p_run.add_argument("--trials", type=int, default=None)
    p_run.add_argument("--epsilon", type=float, default=None)
    p_run.add_argument("--delta", type=float, default=None)
    p_run.add_argument("--allow-delta-override", action="store_true")
    p_run.set_defaults(func=cmd_run)

    p_dec = sub.add_parser("decompose", parents=[common], help="wave-packet analysis of a field")
    p_dec.add_argument("input")
    p_dec.add_argument("--kappa", type=float, default=0.125)
    p_dec.set_defaults(func=cmd_decompose, out=None)
    p_dec.add_argument("--out-file", dest="out", default=None)

    p_par = sub.add_parser("partition", parents=[common], help="polynomial partition of a mass file")
    p_par.add_argument("input")
    p_par.add_argument("--degree", type=int, default=2)
    p_par.add_argument("--r", type=float, default=2.0)
    p_par.set_defaults(func=cmd_partition, out=None)
    p_par.add_argument("--out-file", dest="out", default=None)

    p_pro = sub.add_parser("propagate", parents=[common], help="evolve a spectral field")
    p_pro.add_argument("input")
    p_pro.set_defaults(func=cmd_propagate, out=None)
    p_pro.add_argument("--out-file", dest="out", default=None)

    p_rep = sub.add_parser("report", parents=[common], help="summarize a finished run")
    p_rep.add_argument("run_dir")
    p_rep.set_defaults(func=cmd_report)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
