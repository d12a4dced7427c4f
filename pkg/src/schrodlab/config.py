"""Run configuration: flat key=value files with command-line overrides."""

from dataclasses import dataclass, field


def _parse_scalar(text):
    if not isinstance(text, str):
        return text
    text = text.strip()
    for cast in (int, float):
        try:
            return cast(text)
        except ValueError:
            continue
    if text.lower() in ("true", "false"):
        return text.lower() == "true"
    return text


def _parse_list(text, cast=float):
    return [cast(_parse_scalar(v)) for v in str(text).split(",") if v.strip()]


def _is_pow2(v):
    x = int(v)
    return x > 0 and (x & (x - 1)) == 0


@dataclass
class RunConfig:
    experiment: str = ""
    R_list: list = field(default_factory=lambda: [1024])
    sigma_list: list = field(default_factory=lambda: [2, 4, 8, 16, 32])
    D_list: list = field(default_factory=lambda: [2, 4])
    M: float = 1.0
    N: int = 1
    E: float = 1.0
    K: int = 16
    epsilon: float = 0.2
    delta: float = None          # defaults to epsilon^2
    delta_overridden: bool = False
    trials: int = 20
    seed: int = 0
    out_dir: str = "runs"
    threads: int = 0             # 0: library default
    tolerances: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.delta is None:
            self.delta = self.epsilon**2
        elif not self.delta_overridden:
            raise ValueError(
                "delta differs from epsilon^2; pass the explicit override flag"
            )
        for R in self.R_list:
            if not _is_pow2(R):
                raise ValueError(f"scales must be powers of two, got {R}")

    def as_dict(self):
        return {
            "experiment": self.experiment,
            "R_list": list(self.R_list),
            "sigma_list": list(self.sigma_list),
            "D_list": list(self.D_list),
            "M": self.M,
            "N": self.N,
            "E": self.E,
            "K": self.K,
            "epsilon": self.epsilon,
            "delta": self.delta,
            "trials": self.trials,
            "seed": self.seed,
            "tolerances": dict(self.tolerances),
        }


_LIST_KEYS = {"R_list": int, "sigma_list": int, "D_list": int}
_SCALAR_KEYS = {
    "experiment": str,
    "M": float,
    "N": int,
    "E": float,
    "K": int,
    "epsilon": float,
    "delta": float,
    "trials": int,
    "seed": int,
    "out_dir": str,
    "threads": int,
}


def load_config(path=None, overrides=None):
    """Build a RunConfig from a key=value file plus override pairs.

    Overrides win over file values.  Keys named tol_* populate the
    tolerance table.  Setting delta requires delta_override=true.
    """
    raw = {}
    if path:
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ValueError(f"bad config line: {line!r}")
                key, val = line.split("=", 1)
                raw[key.strip()] = val.strip()
    for key, val in (overrides or {}).items():
        if val is not None:
            raw[key] = val

    kwargs = {}
    tolerances = {}
    for key, val in raw.items():
        if key in _LIST_KEYS:
            kwargs[key] = _parse_list(val, _LIST_KEYS[key])
        elif key in _SCALAR_KEYS:
            kwargs[key] = _SCALAR_KEYS[key](_parse_scalar(val))
        elif key == "delta_override":
            kwargs["delta_overridden"] = bool(_parse_scalar(val))
        elif key.startswith("tol_"):
            tolerances[key[4:]] = float(val)
        else:
            raise ValueError(f"unknown config key: {key}")
    kwargs["tolerances"] = tolerances
    return RunConfig(**kwargs)
